#include "swe/criteria.hpp"

#include <stdexcept>

#include "swe/errors.hpp"

namespace swe {

namespace {

std::size_t quad_x(const QuadratureCovariance& cov, std::size_t mode) {
  if (mode == kSpinMode) return cov.xs();
  if (mode >= cov.config.n_stokes) throw std::out_of_range("mode index");
  return cov.x(mode);
}

std::size_t quad_p(const QuadratureCovariance& cov, std::size_t mode) {
  if (mode == kSpinMode) return cov.ps();
  if (mode >= cov.config.n_stokes) throw std::out_of_range("mode index");
  return cov.p(mode);
}

// Var(sum_i c_i q_i) from the symmetrized covariance
double combo_var(const Eigen::MatrixXd& q,
                 const std::vector<std::pair<std::size_t, double>>& terms) {
  double v = 0.0;
  for (const auto& [i, ci] : terms)
    for (const auto& [j, cj] : terms) v += ci * cj * q(i, j);
  return v;
}

}  // namespace

double duan_V(const QuadratureCovariance& cov, std::size_t mode,
              std::size_t partner) {
  const auto xi = quad_x(cov, mode), pi = quad_p(cov, mode);
  const auto xj = quad_x(cov, partner), pj = quad_p(cov, partner);
  const auto& q = cov.matrix;
  const double var_u = q(xi, xi) - 2.0 * q(xi, xj) + q(xj, xj);
  const double var_v = q(pi, pi) + 2.0 * q(pi, pj) + q(pj, pj);
  return var_u + var_v;
}

GainSet vlf_gains(const QuadratureCovariance& cov) {
  if (cov.config.n_stokes < 2)
    throw std::logic_error("vlf gains need at least two Stokes modes");
  const auto& q = cov.matrix;
  const auto p1 = cov.p(0), p2 = cov.p(1), ps = cov.ps();
  if (!(q(p1, p1) > 0.0) || !(q(p2, p2) > 0.0) || !(q(ps, ps) > 0.0))
    throw degenerate_state_error("zero momentum variance in gain formula");
  GainSet g;
  g.g1 = -(q(p1, p2) + q(p1, ps)) / q(p1, p1) + 0.0;  // +0.0 canonicalizes -0
  g.g2 = -(q(p1, p2) + q(p2, ps)) / q(p2, p2) + 0.0;
  g.gs = -(q(p1, ps) + q(p2, ps)) / q(ps, ps) + 0.0;
  return g;
}

VlfValues vlf_correlations(const QuadratureCovariance& cov,
                           const GainSet& gains) {
  if (cov.config.n_stokes < 2)
    throw std::logic_error("vlf correlations need at least two Stokes modes");
  const auto& q = cov.matrix;
  const auto x1 = cov.x(0), x2 = cov.x(1), xs = cov.xs();
  const auto p1 = cov.p(0), p2 = cov.p(1), ps = cov.ps();

  VlfValues v;
  v.v12 = combo_var(q, {{x1, 1.0}, {x2, -1.0}}) +
          combo_var(q, {{p1, 1.0}, {p2, 1.0}, {ps, gains.gs}});
  v.v1s = combo_var(q, {{x1, 1.0}, {xs, -1.0}}) +
          combo_var(q, {{p1, 1.0}, {p2, gains.g2}, {ps, 1.0}});
  v.v2s = combo_var(q, {{x2, 1.0}, {xs, -1.0}}) +
          combo_var(q, {{p1, gains.g1}, {p2, 1.0}, {ps, 1.0}});
  return v;
}

CriteriaFlags classify(const CriteriaReport& report) {
  CriteriaFlags flags;
  const std::size_t n = report.t.size();
  flags.duan_entangled.resize(n, false);
  for (std::size_t i = 0; i < report.v.size(); ++i)
    flags.duan_entangled[i] = report.v[i] < 4.0;
  if (report.has_vlf()) {
    flags.v12_ok.resize(n, false);
    flags.v1s_ok.resize(n, false);
    flags.v2s_ok.resize(n, false);
    flags.tripartite.resize(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      flags.v12_ok[i] = report.v12[i] < 4.0;
      flags.v1s_ok[i] = report.v1s[i] < 4.0;
      flags.v2s_ok[i] = report.v2s[i] < 4.0;
      const int held = int(flags.v12_ok[i]) + int(flags.v1s_ok[i]) +
                       int(flags.v2s_ok[i]);
      flags.tripartite[i] = held >= 2;
    }
  }
  return flags;
}

}  // namespace swe
