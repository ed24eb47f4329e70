#include "swe/oracle/agreement.hpp"

#include <cmath>

#include "swe/engine.hpp"
#include "swe/operator_basis.hpp"

namespace swe::oracle {

std::vector<AgreementPoint> default_agreement_points() {
  return {
      {"bipartite r=0 k=1 t=0.8", 0.0, {1.0}, 0.8},
      {"bipartite r=1/20 k=1 t=1.2", 0.05, {1.0}, 1.2},
      {"bipartite r=1/10 k=1 t=1.0", 0.1, {1.0}, 1.0},
      {"bipartite r=0.3 k=1.5 t=0.8", 0.3, {1.5}, 0.8},
      {"bipartite r=1/20 k=-1 t=0.9", 0.05, {-1.0}, 0.9},
      {"tripartite r=1/20 k=1,1 t=0.7", 0.05, {1.0, 1.0}, 0.7},
      {"tripartite r=0 k=1,1 t=0.8", 0.0, {1.0, 1.0}, 0.8},
      {"tripartite r=1/20 k=1,0.5 t=0.7", 0.05, {1.0, 0.5}, 0.7},
      {"tripartite r=1/10 k=1,0.7 t=0.6", 0.1, {1.0, 0.7}, 0.6},
      {"tripartite r=1/50 k=0.6,1 t=0.7", 0.02, {0.6, 1.0}, 0.7},
  };
}

std::vector<AgreementRow> run_boson_agreement(
    const std::vector<AgreementPoint>& points, double tol_floor,
    double tail_target) {
  std::vector<AgreementRow> rows;
  rows.reserve(points.size());

  for (const auto& pt : points) {
    const ModelConfig cfg = build_config(pt.ratio, pt.couplings);

    OracleConfig ocfg;
    ocfg.model = cfg;
    ocfg.which = OracleKind::rescaled_boson;
    ocfg.fock_cutoff = 12;
    AdaptiveResult res = evolve_adaptive(ocfg, pt.t, tail_target);
    ocfg.fock_cutoff = res.cutoff_used;
    const OracleCriteria exact = measure_criteria(res.state, ocfg);

    const QuadratureCovariance cov = covariance_at(cfg, pt.t, SpinInit::css);
    double disc = std::abs(exact.v - duan_V(cov, 0));
    if (exact.has_vlf) {
      const GainSet g = vlf_gains(cov);
      const VlfValues v = vlf_correlations(cov, g);
      disc = std::max(disc, std::abs(exact.vlf.v12 - v.v12));
      disc = std::max(disc, std::abs(exact.vlf.v1s - v.v1s));
      disc = std::max(disc, std::abs(exact.vlf.v2s - v.v2s));
    }

    AgreementRow row;
    row.label = pt.label;
    row.max_discrepancy = disc;
    row.truncation = res.info.truncation_estimate;
    row.tolerance = std::max(tol_floor, row.truncation);
    row.cutoff = res.cutoff_used;
    row.pass = disc <= row.tolerance;
    rows.push_back(std::move(row));
  }
  return rows;
}

DickeConvergence run_dicke_convergence(const std::vector<std::size_t>& n_atoms,
                                       double t) {
  const ModelConfig cfg = build_config(0.0, {1.0});
  const double v_gauss = duan_V(covariance_at(cfg, t, SpinInit::css), 0);

  DickeConvergence out;
  out.n_atoms = n_atoms;

  for (std::size_t na : n_atoms) {
    OracleConfig ocfg;
    ocfg.model = cfg;
    ocfg.which = OracleKind::dicke;
    ocfg.n_atoms = na;
    ocfg.fock_cutoff = std::max<std::size_t>(na, 8);

    OracleState state = prepare_initial(ocfg);

    // t = 0 spin moments must equal the coherent-spin formulas exactly
    const MomentMatrix m0 = measure_moments(state, ocfg);
    const std::size_t s = basis::spin(cfg.n_stokes);
    const std::size_t sd = basis::spin_dag(cfg.n_stokes);
    const double c2 = cfg.cos2_theta(), s2 = cfg.sin2_theta();
    out.moment_error_t0 = std::max(
        {out.moment_error_t0, std::abs(m0.matrix(s, sd) - c2 * c2),
         std::abs(m0.matrix(sd, s) - s2 * s2),
         std::abs(m0.matrix(s, s) + s2 * c2),
         std::abs(m0.matrix(sd, sd) + s2 * c2)});

    evolve(state, ocfg, t);
    out.discrepancy.push_back(
        std::abs(measure_criteria(state, ocfg).v - v_gauss));
  }

  out.strictly_decreasing = true;
  for (std::size_t i = 1; i < out.discrepancy.size(); ++i)
    if (!(out.discrepancy[i] < out.discrepancy[i - 1]))
      out.strictly_decreasing = false;
  return out;
}

}  // namespace swe::oracle
