#pragma once

#include <stdexcept>
#include <string>

namespace swe {

// Integration / truncation failures; CLI maps these to exit code 3.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Fock cutoff too small to hold the state to the requested tail population.
struct truncation_error : numerical_error {
  explicit truncation_error(const std::string& what) : numerical_error(what) {}
};

// Zero-variance denominator in an optimized-gain formula.
struct degenerate_state_error : std::runtime_error {
  explicit degenerate_state_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace swe
