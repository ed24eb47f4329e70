#include "swe/propagator.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "swe/operator_basis.hpp"

namespace swe {

namespace detail {

double sinhc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-2) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0));
  }
  return std::sinh(x) / x;
}

double coshm1_over_x2(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-2) {
    const double x2 = x * x;
    return 0.5 * (1.0 + x2 / 12.0 * (1.0 + x2 / 30.0 * (1.0 + x2 / 56.0)));
  }
  return (std::cosh(x) - 1.0) / (x * x);
}

}  // namespace detail

BogoliubovTransform analytic_transform(const ModelConfig& cfg, double t) {
  const std::size_t n_modes = cfg.n_stokes;
  const std::size_t d = basis::dim(n_modes);
  const std::size_t s = basis::spin(n_modes);
  const std::size_t sd = basis::spin_dag(n_modes);
  const double a = cfg.boson_factor;
  const auto& k = cfg.couplings;

  double sumk2 = 0.0;
  for (double kn : k) sumk2 += kn * kn;
  const double beta = std::sqrt(a * sumk2);
  const double bt = beta * t;

  const double ch = std::cosh(bt);
  const double sh_over_b = t * detail::sinhc(bt);            // sinh(bt)/beta
  const double chm1_over_b2 = t * t * detail::coshm1_over_x2(bt);

  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
  for (std::size_t n = 0; n < n_modes; ++n) {
    m(basis::a(n), sd) = k[n] * sh_over_b;
    m(basis::adag(n), s) = k[n] * sh_over_b;
    m(s, basis::adag(n)) = a * k[n] * sh_over_b;
    m(sd, basis::a(n)) = a * k[n] * sh_over_b;
    for (std::size_t mm = 0; mm < n_modes; ++mm) {
      const double mix = k[n] * k[mm] * a * chm1_over_b2;
      m(basis::a(n), basis::a(mm)) += mix;
      m(basis::adag(n), basis::adag(mm)) += mix;
    }
  }
  m(s, s) = ch;
  m(sd, sd) = ch;

  return {std::move(m), t, cfg};
}

Eigen::MatrixXd heisenberg_generator(const ModelConfig& cfg) {
  const std::size_t n_modes = cfg.n_stokes;
  const std::size_t d = basis::dim(n_modes);
  const std::size_t s = basis::spin(n_modes);
  const std::size_t sd = basis::spin_dag(n_modes);
  const double a = cfg.boson_factor;

  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t n = 0; n < n_modes; ++n) {
    const double kn = cfg.couplings[n];
    gen(basis::a(n), sd) = kn;
    gen(basis::adag(n), s) = kn;
    gen(s, basis::adag(n)) = a * kn;
    gen(sd, basis::a(n)) = a * kn;
  }
  return gen;
}

BogoliubovTransform numeric_transform(const ModelConfig& cfg, double t) {
  Eigen::MatrixXd at = heisenberg_generator(cfg) * t;
  return {at.exp(), t, cfg};
}

}  // namespace swe
