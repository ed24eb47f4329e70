#include "swe/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace swe {

namespace {

std::size_t thread_count() {
  if (const char* env = std::getenv("SWE_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min(thread_count(), n ? n : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

QuadratureCovariance covariance_at(const ModelConfig& cfg, double t,
                                   SpinInit init) {
  const MomentMatrix c0 = initial_moments(cfg, init);
  return to_quadratures(propagate(c0, analytic_transform(cfg, t)));
}

CriteriaReport compute_report(const ModelConfig& cfg, const TimeGrid& grid,
                              SpinInit init) {
  const std::size_t n_pts = grid.steps;
  const std::size_t n_modes = cfg.n_stokes;

  CriteriaReport rep;
  rep.t.resize(n_pts);
  rep.v.resize(n_pts);
  if (n_modes >= 2) {
    rep.v12.resize(n_pts);
    rep.v1s.resize(n_pts);
    rep.v2s.resize(n_pts);
    rep.gains.resize(n_pts);
  }
  if (n_modes >= 2) {
    for (std::size_t i = 0; i < n_modes; ++i)
      rep.pair_names.push_back("V[" + std::to_string(i + 1) + ",s]");
    for (std::size_t i = 0; i < n_modes; ++i)
      for (std::size_t j = i + 1; j < n_modes; ++j)
        rep.pair_names.push_back("V[" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "]");
    rep.pair_v.assign(rep.pair_names.size(),
                      std::vector<double>(n_pts, 0.0));
  }

  const MomentMatrix c0 = initial_moments(cfg, init);
  parallel_for(n_pts, [&](std::size_t i) {
    const double t = grid.at(i);
    const QuadratureCovariance cov =
        to_quadratures(propagate(c0, analytic_transform(cfg, t)));
    rep.t[i] = t;
    rep.v[i] = duan_V(cov, 0);
    if (n_modes >= 2) {
      const GainSet g = vlf_gains(cov);
      const VlfValues v = vlf_correlations(cov, g);
      rep.gains[i] = g;
      rep.v12[i] = v.v12;
      rep.v1s[i] = v.v1s;
      rep.v2s[i] = v.v2s;
    }
    if (n_modes >= 2) {
      std::size_t col = 0;
      for (std::size_t m = 0; m < n_modes; ++m)
        rep.pair_v[col++][i] = duan_V(cov, m, kSpinMode);
      for (std::size_t m = 0; m < n_modes; ++m)
        for (std::size_t l = m + 1; l < n_modes; ++l)
          rep.pair_v[col++][i] = duan_V(cov, m, l);
    }
  });

  return rep;
}

}  // namespace swe
