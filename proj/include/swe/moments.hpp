#pragma once

#include <Eigen/Dense>

#include "swe/model.hpp"
#include "swe/propagator.hpp"

namespace swe {

// How the spin mode enters the initial second moments.
//   css:    exact fluctuation moments of the coherent-spin product state,
//           <dS dS+> = cos^4(theta), <dS+ dS> = sin^4(theta),
//           <dS dS> = -sin^2(theta) cos^2(theta)  (N_a-independent)
//   vacuum: bare vacuum spin, <dS dS+> = 1 and no anomalous moment
enum class SpinInit { css, vacuum };

// Centered, operator-ordered second moments C_ij = <dxi_i dxi_j> in the
// operator-basis ordering. For css initial data C - C^T equals the
// commutator Gram matrix at every time.
struct MomentMatrix {
  Eigen::MatrixXd matrix;
  double time = 0.0;
  ModelConfig config;
  SpinInit spin_init = SpinInit::css;
};

// Quadrature covariance over (x_1, p_1, ..., x_N, p_N, x_s, p_s) with
// x = a + a+ and p = -i(a - a+); symmetrized, real, PSD. Vacuum variance is
// 1 in this convention.
struct QuadratureCovariance {
  Eigen::MatrixXd matrix;
  double time = 0.0;
  ModelConfig config;

  std::size_t x(std::size_t mode) const { return 2 * mode; }
  std::size_t p(std::size_t mode) const { return 2 * mode + 1; }
  std::size_t xs() const { return 2 * config.n_stokes; }
  std::size_t ps() const { return 2 * config.n_stokes + 1; }

  double var_x(std::size_t mode) const { return matrix(x(mode), x(mode)); }
  double var_p(std::size_t mode) const { return matrix(p(mode), p(mode)); }
};

// Stokes modes in vacuum, spin block per SpinInit; no cross correlations.
MomentMatrix initial_moments(const ModelConfig& cfg,
                             SpinInit init = SpinInit::css);

// C(t) = M C0 M^T. Throws std::logic_error on dimension mismatch.
MomentMatrix propagate(const MomentMatrix& c0, const BogoliubovTransform& m);

QuadratureCovariance to_quadratures(const MomentMatrix& c);

}  // namespace swe
