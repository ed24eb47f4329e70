#pragma once

// Cross-validation battery between the Gaussian engine and the exact
// truncated-space evolutions; backs the `oracle-check` CLI command and the
// acceptance suite.

#include <string>
#include <vector>

#include "swe/oracle/oracle.hpp"

namespace swe::oracle {

struct AgreementPoint {
  std::string label;
  double ratio = 0.0;
  std::vector<double> couplings;
  double t = 0.0;
};

struct AgreementRow {
  std::string label;
  double max_discrepancy = 0.0;  // over V (and V12/V1s/V2s when N >= 2)
  double tolerance = 0.0;        // max(tol_floor, truncation estimate)
  double truncation = 0.0;
  std::size_t cutoff = 0;
  bool pass = false;
};

// The default ten-point battery: mixed ratios, couplings (including a
// negative one), one- and two-mode configurations.
std::vector<AgreementPoint> default_agreement_points();

// Rescaled-boson oracle vs Gaussian engine at each point, with the cutoff
// grown until the truncation tail is below tail_target.
std::vector<AgreementRow> run_boson_agreement(
    const std::vector<AgreementPoint>& points, double tol_floor = 1e-5,
    double tail_target = 1e-8);

struct DickeConvergence {
  std::vector<std::size_t> n_atoms;
  std::vector<double> discrepancy;     // |V_dicke - V_gauss| per N_a
  double moment_error_t0 = 0.0;        // worst t=0 spin-moment deviation
  bool strictly_decreasing = false;
};

// Bosonization convergence study at N = 1, r = 0, k1 = 1, fixed t.
DickeConvergence run_dicke_convergence(
    const std::vector<std::size_t>& n_atoms = {4, 8, 16, 32}, double t = 0.5);

}  // namespace swe::oracle
