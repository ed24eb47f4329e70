#include "swe/moments.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "swe/operator_basis.hpp"

namespace swe {

MomentMatrix initial_moments(const ModelConfig& cfg, SpinInit init) {
  const std::size_t d = basis::dim(cfg.n_stokes);
  const std::size_t s = basis::spin(cfg.n_stokes);
  const std::size_t sd = basis::spin_dag(cfg.n_stokes);

  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t n = 0; n < cfg.n_stokes; ++n)
    c(basis::a(n), basis::adag(n)) = 1.0;

  if (init == SpinInit::css) {
    const double c2 = cfg.cos2_theta();
    const double s2 = cfg.sin2_theta();
    c(s, sd) = c2 * c2;
    c(sd, s) = s2 * s2;
    c(s, s) = -s2 * c2;
    c(sd, sd) = -s2 * c2;
  } else {
    c(s, sd) = 1.0;
  }

  return {std::move(c), 0.0, cfg, init};
}

MomentMatrix propagate(const MomentMatrix& c0, const BogoliubovTransform& m) {
  if (c0.matrix.rows() != m.matrix.rows())
    throw std::logic_error("moment matrix and transform dimensions differ");
  return {m.matrix * c0.matrix * m.matrix.transpose(), c0.time + m.time,
          c0.config, c0.spin_init};
}

QuadratureCovariance to_quadratures(const MomentMatrix& c) {
  using cplx = std::complex<double>;
  const std::size_t d = c.matrix.rows();

  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t pair = 0; pair < d / 2; ++pair) {
    const std::size_t op = 2 * pair, opd = 2 * pair + 1;
    l(op, op) = 1.0;          // x = op + op+
    l(op, opd) = 1.0;
    l(opd, op) = cplx(0, -1); // p = -i (op - op+)
    l(opd, opd) = cplx(0, 1);
  }

  // <dq_i dq_j> splits into a real symmetric part plus half the (imaginary,
  // antisymmetric) quadrature commutator; symmetrizing removes the latter
  // exactly.
  Eigen::MatrixXcd q = l * c.matrix.cast<cplx>() * l.transpose();
  Eigen::MatrixXd sym = 0.5 * (q.real() + q.real().transpose());
  return {std::move(sym), c.time, c.config};
}

}  // namespace swe
