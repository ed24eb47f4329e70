#include "swe/oracle/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "swe/errors.hpp"
#include "swe/kernels.hpp"
#include "swe/operator_basis.hpp"

namespace swe::oracle {

namespace {

std::vector<double> spin_initial_amplitudes(const OracleConfig& ocfg,
                                            std::size_t spin_dim) {
  const double theta = ocfg.model.theta;
  std::vector<double> c(spin_dim, 0.0);

  if (ocfg.which == OracleKind::dicke) {
    // (cos t |1> + sin t |2>)^(x N_a) in the symmetric basis: binomial
    // amplitudes, generated by a stable ratio recurrence
    const std::size_t na = ocfg.n_atoms;
    c[0] = std::pow(std::cos(theta), double(na));
    for (std::size_t m = 0; m + 1 < spin_dim; ++m)
      c[m + 1] =
          c[m] * std::tan(theta) * std::sqrt(double(na - m) / double(m + 1));
  } else {
    // squeezed vacuum with sinh(rho) = sin^2(theta)/sqrt(a): reproduces the
    // coherent-spin moments of S = sqrt(a) b exactly
    const double a = ocfg.model.boson_factor;
    const double s2 = ocfg.model.sin2_theta();
    const double sh = s2 / std::sqrt(a);
    const double ch = std::sqrt(1.0 + sh * sh);
    const double th = sh / ch;
    c[0] = 1.0 / std::sqrt(ch);
    for (std::size_t k = 0; 2 * k + 2 < spin_dim; ++k)
      c[2 * k + 2] =
          -th * std::sqrt(double(2 * k + 1) / double(2 * k + 2)) * c[2 * k];

    double tail = c[spin_dim - 1] * c[spin_dim - 1];
    if (spin_dim >= 2) tail += c[spin_dim - 2] * c[spin_dim - 2];
    if (tail >= 1e-8)
      throw truncation_error(
          "fock cutoff too small for the initial squeezed spin state");
  }

  double nrm2 = 0.0;
  for (double x : c) nrm2 += x * x;
  const double inv = 1.0 / std::sqrt(nrm2);
  for (double& x : c) x *= inv;
  return c;
}

SpinLadder make_ladder(const OracleConfig& ocfg, const FockBasis& basis) {
  return ocfg.which == OracleKind::dicke
             ? dicke_ladder(ocfg.n_atoms)
             : boson_ladder(basis.spin_dim, ocfg.model.boson_factor);
}

}  // namespace

double OracleState::norm() const {
  return std::sqrt(kernels::dnrm2sq(
      reinterpret_cast<const double*>(amp.data()), 2 * amp.size()));
}

OracleState prepare_initial(const OracleConfig& ocfg) {
  if (ocfg.fock_cutoff < 4)
    throw std::invalid_argument("fock cutoff must be at least 4");
  if (ocfg.which == OracleKind::dicke && ocfg.n_atoms < 1)
    throw std::invalid_argument("dicke oracle needs at least one atom");

  const std::size_t n_modes = ocfg.model.n_stokes;
  const std::size_t mode_dim = ocfg.fock_cutoff + 1;
  const std::size_t spin_dim = ocfg.which == OracleKind::dicke
                                   ? ocfg.n_atoms + 1
                                   : ocfg.fock_cutoff + 1;

  OracleState state;
  state.basis =
      FockBasis(std::vector<std::size_t>(n_modes, mode_dim), spin_dim);
  state.amp.assign(state.basis.dim, cplx(0.0));

  // Stokes modes in vacuum: only level-0 mode indices are populated and the
  // spin index is the fastest, so the spin amplitudes sit at the front.
  const auto spin_amp = spin_initial_amplitudes(ocfg, spin_dim);
  for (std::size_t s = 0; s < spin_dim; ++s) state.amp[s] = spin_amp[s];
  return state;
}

double truncation_tail(const OracleState& state, const OracleConfig& ocfg) {
  const FockBasis& b = state.basis;
  const double* amp_d = reinterpret_cast<const double*>(state.amp.data());
  double worst = 0.0;

  for (std::size_t n = 0; n < b.mode_dims.size(); ++n) {
    const std::size_t stride = b.mode_strides[n];
    const std::size_t d = b.mode_dims[n];
    const std::size_t block = stride * d;
    double pop = 0.0;
    for (std::size_t base = (d - 1) * stride; base < b.dim; base += block)
      pop += kernels::dnrm2sq(amp_d + 2 * base, 2 * stride);
    worst = std::max(worst, pop);
  }

  if (ocfg.which == OracleKind::rescaled_boson) {
    double pop = 0.0;
    for (std::size_t i = b.spin_dim - 1; i < b.dim; i += b.spin_dim)
      pop += std::norm(state.amp[i]);
    worst = std::max(worst, pop);
  }
  return worst;
}

EvolveInfo evolve(OracleState& state, const OracleConfig& ocfg, double t,
                  const LanczosOptions& opt) {
  const PairHamiltonian h(state.basis, ocfg.model.couplings,
                          make_ladder(ocfg, state.basis));
  krylov_propagate(h, state.amp, t, opt);
  state.time += t;

  const double nrm = state.norm();
  if (std::abs(nrm - 1.0) > 1e-10)
    throw numerical_error("state norm drifted to " + std::to_string(nrm));

  EvolveInfo info;
  info.truncation_estimate = truncation_tail(state, ocfg);
  info.flagged = info.truncation_estimate > kTruncationFlagThreshold;
  return info;
}

MomentMatrix measure_moments(const OracleState& state,
                             const OracleConfig& ocfg) {
  const std::size_t n_modes = ocfg.model.n_stokes;
  const std::size_t d = basis::dim(n_modes);
  const std::size_t dim = state.basis.dim;
  const PairHamiltonian h(state.basis, ocfg.model.couplings,
                          make_ladder(ocfg, state.basis));

  // phi_i = xi_i |psi> in the engine's operator ordering
  std::vector<std::vector<cplx>> phi(d, std::vector<cplx>(dim));
  for (std::size_t n = 0; n < n_modes; ++n) {
    h.apply_annihilator(n, state.amp.data(), phi[basis::a(n)].data());
    h.apply_creator(n, state.amp.data(), phi[basis::adag(n)].data());
  }
  h.apply_spin_lower(state.amp.data(), phi[basis::spin(n_modes)].data());
  h.apply_spin_raise(state.amp.data(), phi[basis::spin_dag(n_modes)].data());

  std::vector<cplx> mean(d);
  for (std::size_t i = 0; i < d; ++i)
    mean[i] = kernels::zdotc(state.amp.data(), phi[i].data(), dim);

  Eigen::MatrixXd c(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t iadj = basis::adjoint(i);
    for (std::size_t j = 0; j < d; ++j) {
      const cplx second =
          kernels::zdotc(phi[iadj].data(), phi[j].data(), dim);
      c(i, j) = (second - mean[i] * mean[j]).real();
    }
  }
  return {std::move(c), state.time, ocfg.model, SpinInit::css};
}

OracleCriteria measure_criteria(const OracleState& state,
                                const OracleConfig& ocfg) {
  const QuadratureCovariance cov =
      to_quadratures(measure_moments(state, ocfg));
  OracleCriteria out;
  out.v = duan_V(cov, 0);
  if (ocfg.model.n_stokes >= 2) {
    out.has_vlf = true;
    out.gains = vlf_gains(cov);
    out.vlf = vlf_correlations(cov, out.gains);
  }
  return out;
}

double mean_mode_occupation(const OracleState& state, std::size_t mode) {
  const FockBasis& b = state.basis;
  double acc = 0.0;
  for (std::size_t i = 0; i < b.dim; ++i)
    acc += double(b.level_of(i, mode)) * std::norm(state.amp[i]);
  return acc;
}

double mean_spin_excitation(const OracleState& state) {
  const FockBasis& b = state.basis;
  double acc = 0.0;
  for (std::size_t i = 0; i < b.dim; ++i)
    acc += double(b.spin_of(i)) * std::norm(state.amp[i]);
  return acc;
}

AdaptiveResult evolve_adaptive(OracleConfig ocfg, double t, double tail_target,
                               std::size_t cutoff_cap) {
  while (true) {
    bool fits = true;
    AdaptiveResult res;
    try {
      res.state = prepare_initial(ocfg);
      res.info = evolve(res.state, ocfg, t);
    } catch (const truncation_error&) {
      fits = false;
    }
    if (fits && res.info.truncation_estimate < tail_target) {
      res.cutoff_used = ocfg.fock_cutoff;
      return res;
    }
    if (ocfg.fock_cutoff * 2 > cutoff_cap)
      throw truncation_error("cutoff cap reached while chasing tail target");
    ocfg.fock_cutoff *= 2;
  }
}

}  // namespace swe::oracle
