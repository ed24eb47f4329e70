#pragma once

// Brute-force validation path: exact state-vector evolution in a truncated
// product basis. Two flavours:
//   rescaled_boson - the spin mode is a literal boson b with S = sqrt(a) b,
//     prepared in the squeezed vacuum that reproduces the coherent-spin
//     fluctuation moments exactly. Checks the Gaussian engine end to end.
//   dicke - the exact collective two-level ensemble in its symmetric
//     (N_a+1)-dimensional subspace. Checks the bosonization itself.

#include <complex>
#include <cstddef>
#include <vector>

#include "swe/criteria.hpp"
#include "swe/model.hpp"
#include "swe/moments.hpp"
#include "swe/oracle/fock_basis.hpp"
#include "swe/oracle/hamiltonian.hpp"
#include "swe/oracle/lanczos.hpp"

namespace swe::oracle {

enum class OracleKind { rescaled_boson, dicke };

struct OracleConfig {
  ModelConfig model;
  OracleKind which = OracleKind::rescaled_boson;
  std::size_t fock_cutoff = 16;  // per-mode photon-number cutoff n_max >= 4
  std::size_t n_atoms = 16;      // dicke only
};

struct OracleState {
  FockBasis basis;
  std::vector<cplx> amp;
  double time = 0.0;

  double norm() const;
};

struct EvolveInfo {
  double truncation_estimate = 0.0;  // max population at any truncated edge
  bool flagged = false;              // estimate above the acceptance bound
};

inline constexpr double kTruncationFlagThreshold = 1e-6;

// Product of the spin-mode initial state (binomial coherent-spin amplitudes
// for dicke, squeezed vacuum for rescaled_boson) with Stokes vacua. Throws
// truncation_error when the squeezed state does not fit the cutoff
// (tail population >= 1e-8) and std::invalid_argument on a bad config.
OracleState prepare_initial(const OracleConfig& ocfg);

// In-place exp(G t) with G = sum_n k_n (a_n+ S+ - a_n S); norm is checked to
// 1e-10 after the step.
EvolveInfo evolve(OracleState& state, const OracleConfig& ocfg, double t,
                  const LanczosOptions& opt = {});

// Population at the top retained level, per axis; the max is the truncation
// estimate. The dicke spin axis is exact and does not count.
double truncation_tail(const OracleState& state, const OracleConfig& ocfg);

// Centered operator-ordered second moments of (a_1, a_1+, ..., S, S+)
// measured directly from the state; feeds the same quadrature/criteria code
// path as the Gaussian engine.
MomentMatrix measure_moments(const OracleState& state,
                             const OracleConfig& ocfg);

struct OracleCriteria {
  double v = 0.0;  // first mode vs spin
  bool has_vlf = false;
  GainSet gains;
  VlfValues vlf;
};

OracleCriteria measure_criteria(const OracleState& state,
                                const OracleConfig& ocfg);

// Mean photon number of one Stokes mode and mean spin excitation number.
double mean_mode_occupation(const OracleState& state, std::size_t mode);
double mean_spin_excitation(const OracleState& state);

struct AdaptiveResult {
  OracleState state;
  EvolveInfo info;
  std::size_t cutoff_used = 0;
};

// Doubles the cutoff until the truncation estimate is below tail_target.
AdaptiveResult evolve_adaptive(OracleConfig ocfg, double t,
                               double tail_target = 1e-8,
                               std::size_t cutoff_cap = 512);

}  // namespace swe::oracle
