#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "swe/moments.hpp"

namespace swe {

// Sentinel partner index meaning "the spin mode".
inline constexpr std::size_t kSpinMode = static_cast<std::size_t>(-1);

// Optimized gains for the three-party variance inequalities:
//   g1 = -(<p1 p2> + <p1 ps>) / <p1^2>
//   g2 = -(<p1 p2> + <p2 ps>) / <p2^2>
//   gs = -(<p1 ps> + <p2 ps>) / <ps^2>
// (centered moments). Each is the unconstrained minimizer of the variance
// combination it enters.
struct GainSet {
  double g1 = 0.0;
  double g2 = 0.0;
  double gs = 0.0;
};

struct VlfValues {
  double v12 = 0.0;
  double v1s = 0.0;
  double v2s = 0.0;
};

// Two-party correlation V = Var(x_i - x_j) + Var(p_i + p_j); entanglement is
// certified by V < 4. partner defaults to the spin mode.
double duan_V(const QuadratureCovariance& cov, std::size_t mode,
              std::size_t partner = kSpinMode);

// Throws degenerate_state_error when a momentum variance vanishes.
GainSet vlf_gains(const QuadratureCovariance& cov);

// V12 = V(x1 - x2) + V(p1 + p2 + gs ps)
// V1s = V(x1 - xs) + V(p1 + g2 p2 + ps)
// V2s = V(x2 - xs) + V(g1 p1 + p2 + ps)
VlfValues vlf_correlations(const QuadratureCovariance& cov,
                           const GainSet& gains);

// Time series of the criteria over one run. Flags are always derived from
// the stored series, never cached independently.
struct CriteriaReport {
  std::vector<double> t;
  std::vector<double> v;                    // first mode vs spin
  std::vector<double> v12, v1s, v2s;        // present when N >= 2
  std::vector<GainSet> gains;               // same length as v12
  std::vector<std::vector<double>> pair_v;  // pairwise columns for N-mode runs
  std::vector<std::string> pair_names;

  bool has_vlf() const { return !v12.empty(); }
};

struct CriteriaFlags {
  std::vector<bool> duan_entangled;  // V < 4
  std::vector<bool> v12_ok, v1s_ok, v2s_ok;
  std::vector<bool> tripartite;  // at least two of the three hold
};

// Strict thresholds: a value exactly at 4 certifies nothing.
CriteriaFlags classify(const CriteriaReport& report);

}  // namespace swe
