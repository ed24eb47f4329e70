#pragma once

#include <istream>
#include <optional>
#include <string>

#include "swe/model.hpp"

namespace swe {

// Plain-text key/value model description, shared verbatim by the CLI and the
// tests. Grammar (see docs/file-formats.md):
//   - `key = value` lines; `#` starts a comment; blank lines ignored
//   - keys: pump_ratio (real), couplings (comma-separated reals)
//   - optional `[physical]` section with g23, omega_m, n_atoms, detuning
struct ParsedConfig {
  ModelConfig model;
  std::optional<PhysicalCoupling> physical;
};

ParsedConfig parse_config(std::istream& in);
ParsedConfig parse_config_file(const std::string& path);

}  // namespace swe
