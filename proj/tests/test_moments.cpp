#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "swe/engine.hpp"
#include "swe/moments.hpp"
#include "swe/operator_basis.hpp"

using swe::build_config;
using swe::initial_moments;
using swe::SpinInit;
namespace basis = swe::basis;

namespace {

// Independent brute force for the coherent-spin-state fluctuation moments:
// the full 2^N_a product space, no symmetric-subspace shortcut. S is the sum
// of single-atom lowering operators over sqrt(N_a).
struct CssBruteForce {
  double dss_dag;  // <dS dS+>
  double ddag_ds;  // <dS+ dS>
  double dss;      // <dS dS>
};

CssBruteForce css_brute_force(int n_atoms, double ratio) {
  const double theta = std::atan(ratio);
  const int dim = 1 << n_atoms;

  // bit i set = atom i in the upper ground state |2>
  Eigen::VectorXd psi(dim);
  for (int b = 0; b < dim; ++b) {
    double amp = 1.0;
    for (int i = 0; i < n_atoms; ++i)
      amp *= (b >> i) & 1 ? std::sin(theta) : std::cos(theta);
    psi(b) = amp;
  }

  Eigen::MatrixXd s_op = Eigen::MatrixXd::Zero(dim, dim);
  const double inv_root = 1.0 / std::sqrt(double(n_atoms));
  for (int b = 0; b < dim; ++b)
    for (int i = 0; i < n_atoms; ++i)
      if ((b >> i) & 1) s_op(b & ~(1 << i), b) += inv_root;

  const Eigen::MatrixXd sdag = s_op.transpose();
  const double mean_s = psi.dot(s_op * psi);
  CssBruteForce out;
  out.dss_dag = psi.dot(s_op * (sdag * psi)) - mean_s * mean_s;
  out.ddag_ds = psi.dot(sdag * (s_op * psi)) - mean_s * mean_s;
  out.dss = psi.dot(s_op * (s_op * psi)) - mean_s * mean_s;
  return out;
}

}  // namespace

TEST_CASE("css spin moments match the exact brute force, independent of N_a") {
  const double r = 1.0 / 20;
  const auto cfg = build_config(r, {1.0});
  const auto c = initial_moments(cfg).matrix;
  const auto s = basis::spin(1), sd = basis::spin_dag(1);

  for (int n_atoms : {2, 3, 5}) {
    CAPTURE(n_atoms);
    const CssBruteForce bf = css_brute_force(n_atoms, r);
    CHECK(std::abs(c(s, sd) - bf.dss_dag) < 1e-12);
    CHECK(std::abs(c(sd, s) - bf.ddag_ds) < 1e-12);
    CHECK(std::abs(c(s, s) - bf.dss) < 1e-12);
    CHECK(std::abs(c(sd, sd) - bf.dss) < 1e-12);
  }

  // frozen values from the brute force at r = 1/20
  CHECK(std::abs(c(s, sd) - 0.99501869) < 1e-8);
  CHECK(std::abs(c(sd, s) - 6.2189e-6) < 1e-8);
  CHECK(std::abs(c(s, s) + 0.00248755) < 1e-8);
}

TEST_CASE("zero mixing angle gives a vacuum-like spin block") {
  const auto c = initial_moments(build_config(0.0, {1.0})).matrix;
  const auto s = basis::spin(1), sd = basis::spin_dag(1);
  CHECK(c(s, sd) == 1.0);
  CHECK(c(sd, s) == 0.0);
  CHECK(c(s, s) == 0.0);
}

TEST_CASE("normal-moment difference equals the boson factor") {
  for (double r : {0.0, 0.02, 0.05, 0.1, 0.3, 0.7}) {
    const auto cfg = build_config(r, {1.0});
    const auto c = initial_moments(cfg).matrix;
    const auto s = basis::spin(1), sd = basis::spin_dag(1);
    CHECK(std::abs(c(s, sd) - c(sd, s) - cfg.boson_factor) < 1e-12);
  }
}

TEST_CASE("stokes blocks are vacuum with no cross correlations") {
  const auto cfg = build_config(0.1, {1.0, 2.0, -0.5});
  const auto c = initial_moments(cfg).matrix;
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(c(basis::a(n), basis::adag(n)) == 1.0);
    CHECK(c(basis::adag(n), basis::a(n)) == 0.0);
    CHECK(c(basis::a(n), basis::a(n)) == 0.0);
    for (std::size_t m = 0; m < 3; ++m)
      if (m != n) CHECK(c(basis::a(n), basis::adag(m)) == 0.0);
  }
}

TEST_CASE("identity transform leaves the moments untouched") {
  const auto cfg = build_config(0.05, {1.0, 0.7});
  const auto c0 = initial_moments(cfg);
  const auto c1 = propagate(c0, swe::analytic_transform(cfg, 0.0));
  CHECK((c1.matrix - c0.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("propagate rejects mismatched dimensions") {
  const auto c0 = initial_moments(build_config(0.05, {1.0}));
  const auto m = swe::analytic_transform(build_config(0.05, {1.0, 1.0}), 1.0);
  CHECK_THROWS_AS(propagate(c0, m), std::logic_error);
}

TEST_CASE("relative-coordinate squeezing at r = 0: Var(x1 - xs) = 2 e^-2t") {
  const auto cfg = build_config(0.0, {1.0});
  const auto cov = swe::covariance_at(cfg, 1.0);
  const auto q = cov.matrix;
  const double var =
      q(cov.x(0), cov.x(0)) - 2.0 * q(cov.x(0), cov.xs()) + q(cov.xs(), cov.xs());
  CHECK(std::abs(var - 0.27067057) < 1e-8);
}

TEST_CASE("antisymmetric part of the moments equals the commutator gram") {
  // time ranges chosen so the e^{2 beta t} matrix scale stays well below
  // 1e-12 / machine-epsilon and the bound is meaningful
  {
    const auto cfg = build_config(0.15, {1.0, -2.0});
    const Eigen::MatrixXd k = basis::commutator_gram(cfg);
    const auto c0 = initial_moments(cfg);
    for (double t : {0.0, 0.4, 1.3}) {
      const auto c = propagate(c0, swe::analytic_transform(cfg, t));
      CHECK((c.matrix - c.matrix.transpose() - k).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
  {
    const auto cfg = build_config(0.05, {0.6});
    const Eigen::MatrixXd k = basis::commutator_gram(cfg);
    const auto c0 = initial_moments(cfg);
    for (double t : {0.9, 2.9}) {
      const auto c = propagate(c0, swe::analytic_transform(cfg, t));
      CHECK((c.matrix - c.matrix.transpose() - k).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
}

TEST_CASE("quadratures: vacuum Stokes and spin variances at t = 0") {
  const auto cfg = build_config(1.0 / 20, {1.0});
  const auto cov = to_quadratures(initial_moments(cfg));
  const double a = cfg.boson_factor;
  CHECK(cov.var_x(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(cov.var_p(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(cov.matrix(cov.x(0), cov.p(0))) < 1e-14);
  CHECK(std::abs(cov.matrix(cov.xs(), cov.xs()) - a * a) < 1e-12);
  CHECK(std::abs(cov.matrix(cov.ps(), cov.ps()) - 1.0) < 1e-12);
  CHECK(std::abs(cov.matrix(cov.xs(), cov.xs()) - 0.99005) < 1e-5);
}

TEST_CASE("spin minimum uncertainty is saturated at t = 0") {
  for (double r : {0.0, 0.05, 0.2, 0.6}) {
    const auto cfg = build_config(r, {1.0});
    const auto cov = to_quadratures(initial_moments(cfg));
    const double a = cfg.boson_factor;
    const double prod =
        cov.matrix(cov.xs(), cov.xs()) * cov.matrix(cov.ps(), cov.ps());
    CHECK(std::abs(prod - a * a) < 1e-10);
  }
}

TEST_CASE("covariances stay positive semidefinite along the evolution") {
  const auto cfg = build_config(0.1, {1.0, 0.5});
  for (double t : {0.0, 0.5, 1.5, 3.0, 5.0}) {
    const auto cov = swe::covariance_at(cfg, t);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov.matrix);
    CHECK(es.eigenvalues().minCoeff() > -1e-10);
  }
}

TEST_CASE("purity: the covariance determinant is conserved") {
  // beyond t ~ 2.5 the determinant's floating-point conditioning (ratio of
  // the squeezed to the stretched eigenvalues) exceeds the 1e-8 bound
  const auto cfg = build_config(1.0 / 20, {1.0, 1.0});
  const double det0 = swe::covariance_at(cfg, 0.0).matrix.determinant();
  for (double t : {0.3, 1.0, 2.0, 2.5}) {
    const double det = swe::covariance_at(cfg, t).matrix.determinant();
    CHECK(std::abs(det - det0) / std::abs(det0) < 1e-8);
  }
}

TEST_CASE("vacuum spin option: unit spin variances, V(0) = 4") {
  const auto cfg = build_config(1.0 / 10, {1.0});
  const auto cov = to_quadratures(initial_moments(cfg, SpinInit::vacuum));
  CHECK(cov.matrix(cov.xs(), cov.xs()) == doctest::Approx(1.0));
  CHECK(cov.matrix(cov.ps(), cov.ps()) == doctest::Approx(1.0));
}
