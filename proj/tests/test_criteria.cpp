#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "swe/criteria.hpp"
#include "swe/engine.hpp"
#include "swe/errors.hpp"

using swe::build_config;
using swe::covariance_at;
using swe::duan_V;
using swe::GainSet;
using swe::vlf_correlations;
using swe::vlf_gains;

namespace {

double var_x_diff(const swe::QuadratureCovariance& cov, std::size_t i,
                  std::size_t j) {
  const auto& q = cov.matrix;
  return q(cov.x(i), cov.x(i)) - 2.0 * q(cov.x(i), cov.x(j)) +
         q(cov.x(j), cov.x(j));
}

}  // namespace

TEST_CASE("initial Duan correlation is 3 + a^2") {
  const auto cfg = build_config(1.0 / 20, {1.0});
  const double v0 = duan_V(covariance_at(cfg, 0.0), 0);
  const double a = cfg.boson_factor;
  CHECK(std::abs(v0 - (3.0 + a * a)) < 1e-12);
  CHECK(std::abs(v0 - 3.99005) < 1e-4);
}

TEST_CASE("zero-ratio limit: V(t) = 4 exp(-2t)") {
  const auto cfg = build_config(0.0, {1.0});
  double worst = 0.0;
  for (int i = 0; i <= 500; ++i) {
    const double t = 5.0 * i / 500.0;
    const double v = duan_V(covariance_at(cfg, t), 0);
    worst = std::max(worst, std::abs(v - 4.0 * std::exp(-2.0 * t)));
  }
  CHECK(worst < 1e-9);
  CHECK(std::abs(duan_V(covariance_at(cfg, 1.0), 0) - 0.54134113) < 1e-7);
}

TEST_CASE("near-perfect correlation window at r = 1/50") {
  const auto cfg = build_config(1.0 / 50, {1.0});
  double vmin = 1e300;
  for (int i = 0; i <= 500; ++i)
    vmin = std::min(vmin, duan_V(covariance_at(cfg, 5.0 * i / 500.0), 0));
  CHECK(vmin <= 0.05);
}

TEST_CASE("duan_V rejects out-of-range modes") {
  const auto cov = covariance_at(build_config(0.0, {1.0}), 0.5);
  CHECK_THROWS_AS(duan_V(cov, 3), std::out_of_range);
}

TEST_CASE("gains vanish on the uncorrelated initial state") {
  const auto cov = covariance_at(build_config(0.1, {1.0, 1.0}), 0.0);
  const GainSet g = vlf_gains(cov);
  CHECK(g.g1 == 0.0);
  CHECK(g.g2 == 0.0);
  CHECK(g.gs == 0.0);
}

TEST_CASE("zero momentum variance is a degenerate state for the gains") {
  const auto cfg = build_config(0.1, {1.0, 1.0});
  swe::QuadratureCovariance cov;
  cov.config = cfg;
  cov.matrix = Eigen::MatrixXd::Zero(6, 6);
  CHECK_THROWS_AS(vlf_gains(cov), swe::degenerate_state_error);
}

TEST_CASE("equal couplings give equal mode gains") {
  const auto cfg = build_config(1.0 / 20, {1.0, 1.0});
  for (double t : {0.5, 1.5, 3.0}) {
    const GainSet g = vlf_gains(covariance_at(cfg, t));
    CHECK(std::abs(g.g1 - g.g2) < 1e-12);
  }
}

TEST_CASE("asymptotic spin gain approaches sqrt(2) for the symmetric pair") {
  const auto cfg = build_config(0.0, {1.0, 1.0});
  const GainSet g = vlf_gains(covariance_at(cfg, 4.0));
  CHECK(std::abs(g.gs - std::sqrt(2.0)) < 0.02);
}

TEST_CASE("initial three-party correlations sit at the boundary") {
  const auto cfg = build_config(1.0 / 10, {1.0, 1.0});
  const auto cov = covariance_at(cfg, 0.0);
  const auto v = vlf_correlations(cov, vlf_gains(cov));
  const double a = cfg.boson_factor;
  CHECK(std::abs(v.v12 - 4.0) < 1e-12);
  CHECK(std::abs(v.v1s - (3.0 + a * a)) < 1e-12);
  CHECK(std::abs(v.v2s - (3.0 + a * a)) < 1e-12);
}

TEST_CASE("x-relative coordinate is frozen at 2 for equal couplings") {
  const auto cfg = build_config(1.0 / 20, {1.0, 1.0});
  for (double t : {0.0, 0.7, 2.2, 4.8}) {
    const double v = var_x_diff(covariance_at(cfg, t), 0, 1);
    CHECK(std::abs(v - 2.0) < 1e-9);
  }
}

TEST_CASE("V12 approaches 2 at late times for the symmetric pair") {
  const auto cfg = build_config(1.0 / 20, {1.0, 1.0});
  const auto cov = covariance_at(cfg, 4.0);
  const auto v = vlf_correlations(cov, vlf_gains(cov));
  CHECK(v.v12 >= 2.0);
  CHECK(v.v12 <= 2.2);
}

TEST_CASE("classification follows the any-two rule with strict thresholds") {
  swe::CriteriaReport rep;
  rep.t = {0.0, 1.0};
  rep.v = {4.0, 3.0};
  rep.v12 = {4.0, 3.9};
  rep.v1s = {4.0, 3.9};
  rep.v2s = {4.0, 4.1};
  rep.gains.resize(2);
  const auto flags = swe::classify(rep);
  CHECK_FALSE(flags.duan_entangled[0]);  // boundary is not entangled
  CHECK_FALSE(flags.tripartite[0]);
  CHECK(flags.duan_entangled[1]);
  CHECK(flags.tripartite[1]);  // two of three suffice
}

TEST_CASE("weak second coupling: deep 1-s correlation, limited pair window") {
  const auto cfg = build_config(1.0 / 20, {1.0, 0.1});
  const swe::CriteriaReport rep = swe::compute_report(cfg, {5.0, 501});

  const double min_v1s = *std::min_element(rep.v1s.begin(), rep.v1s.end());
  CHECK(min_v1s <= 0.05);

  std::size_t pair_count = 0, v1s_count = 0;
  bool pair_inside_v1s = true;
  for (std::size_t i = 0; i < rep.t.size(); ++i) {
    const bool pair_ok = rep.v12[i] < 4.0 && rep.v2s[i] < 4.0;
    const bool v1s_ok = rep.v1s[i] < 4.0;
    pair_count += pair_ok;
    v1s_count += v1s_ok;
    if (pair_ok && !v1s_ok) pair_inside_v1s = false;
  }
  CHECK(pair_count > 0);
  CHECK(pair_inside_v1s);
  CHECK(pair_count < v1s_count);
}

TEST_CASE("closed-form gains are exact variance minimizers") {
  const auto cfg = build_config(1.0 / 20, {1.0, 0.7});
  for (double t : {0.5, 1.2, 2.5}) {
    const auto cov = covariance_at(cfg, t);
    const GainSet g = vlf_gains(cov);
    const auto base = vlf_correlations(cov, g);
    for (double eps : {-0.01, 0.01}) {
      GainSet pg = g;
      pg.gs += eps;
      CHECK(vlf_correlations(cov, pg).v12 >= base.v12 - 1e-12);
      pg = g;
      pg.g2 += eps;
      CHECK(vlf_correlations(cov, pg).v1s >= base.v1s - 1e-12);
      pg = g;
      pg.g1 += eps;
      CHECK(vlf_correlations(cov, pg).v2s >= base.v2s - 1e-12);
    }
  }
}

TEST_CASE("coupling swap exchanges the mode roles") {
  const auto cfg_ab = build_config(1.0 / 20, {1.0, 0.4});
  const auto cfg_ba = build_config(1.0 / 20, {0.4, 1.0});
  for (double t : {0.6, 1.8, 3.5}) {
    const auto cov_ab = covariance_at(cfg_ab, t);
    const auto cov_ba = covariance_at(cfg_ba, t);
    const GainSet g_ab = vlf_gains(cov_ab), g_ba = vlf_gains(cov_ba);
    const auto v_ab = vlf_correlations(cov_ab, g_ab);
    const auto v_ba = vlf_correlations(cov_ba, g_ba);
    CHECK(std::abs(v_ab.v1s - v_ba.v2s) < 1e-10);
    CHECK(std::abs(v_ab.v2s - v_ba.v1s) < 1e-10);
    CHECK(std::abs(v_ab.v12 - v_ba.v12) < 1e-10);
    CHECK(std::abs(g_ab.g1 - g_ba.g2) < 1e-10);
    CHECK(std::abs(g_ab.g2 - g_ba.g1) < 1e-10);
  }
}

TEST_CASE("stronger pumping weakens the best two-party correlation") {
  double prev_min = -1.0;
  for (double r : {1.0 / 50, 1.0 / 20, 1.0 / 10, 1.0 / 5}) {
    const auto cfg = build_config(r, {1.0});
    double vmin = 1e300;
    for (int i = 0; i <= 500; ++i)
      vmin = std::min(vmin, duan_V(covariance_at(cfg, 5.0 * i / 500.0), 0));
    CHECK(vmin >= prev_min);
    prev_min = vmin;
  }
}

TEST_CASE("three-party correlations depend weakly on the pump ratio") {
  // V1s/V2s climb exponentially once their window closes, so a raw pointwise
  // comparison diverges near the threshold crossing however weak the ratio
  // dependence is. The regression is therefore phrased in the stable
  // observables: V12 pointwise, the series minima, and the crossing times.
  const swe::TimeGrid grid{5.0, 501};
  std::vector<swe::CriteriaReport> reps;
  for (double r : {1.0 / 50, 1.0 / 20, 1.0 / 10})
    reps.push_back(swe::compute_report(build_config(r, {1.0, 1.0}), grid));

  auto min_of = [](const std::vector<double>& v) {
    return *std::min_element(v.begin(), v.end());
  };
  auto last_below_4 = [&](const std::vector<double>& v) {
    double last = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] < 4.0) last = grid.at(i);
    return last;
  };

  for (std::size_t p = 0; p + 1 < reps.size(); ++p)
    for (std::size_t q = p + 1; q < reps.size(); ++q) {
      for (std::size_t i = 0; i < grid.steps; ++i)
        CHECK(std::abs(reps[p].v12[i] - reps[q].v12[i]) < 0.2);
      CHECK(std::abs(min_of(reps[p].v12) - min_of(reps[q].v12)) < 0.2);
      CHECK(std::abs(min_of(reps[p].v1s) - min_of(reps[q].v1s)) < 0.2);
      CHECK(std::abs(min_of(reps[p].v2s) - min_of(reps[q].v2s)) < 0.2);
      CHECK(std::abs(last_below_4(reps[p].v1s) - last_below_4(reps[q].v1s)) <
            0.2);
      CHECK(std::abs(last_below_4(reps[p].v2s) - last_below_4(reps[q].v2s)) <
            0.2);
    }
}
