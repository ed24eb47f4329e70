#pragma once

#include <cstddef>
#include <functional>

#include "swe/criteria.hpp"
#include "swe/moments.hpp"

namespace swe {

// Uniform grid over [0, t_max] in units of 1/k_1, endpoints included.
struct TimeGrid {
  double t_max = 5.0;
  std::size_t steps = 501;  // number of points, >= 2

  double at(std::size_t i) const {
    return t_max * double(i) / double(steps - 1);
  }
};

// Quadrature covariance at one time: analytic transform applied to the
// initial moments.
QuadratureCovariance covariance_at(const ModelConfig& cfg, double t,
                                   SpinInit init = SpinInit::css);

// Full criteria sweep. For N = 1 only the V series is filled; for N >= 2 the
// three-party columns and gains are added; for N >= 3 pairwise columns for
// every mode pair and every mode against the spin.
CriteriaReport compute_report(const ModelConfig& cfg, const TimeGrid& grid,
                              SpinInit init = SpinInit::css);

// Index-parallel loop with deterministic output ordering: body(i) writes to
// slot i only. Thread count from SWE_THREADS (default: hardware concurrency).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace swe
