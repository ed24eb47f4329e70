#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swe/engine.hpp"

namespace swe {

inline constexpr const char* kToolVersion = "swe 0.1.0";

enum class Command { bipartite, tripartite, nmode, fig2, fig3, oracle_check };
enum class OutputFormat { csv, json };

// One deterministic run: identical specs produce byte-identical artifacts.
struct RunSpec {
  Command command = Command::bipartite;
  double ratio = 0.05;
  std::vector<double> couplings = {1.0};  // k_1..k_N (nmode); k_1 otherwise
  double k2 = 1.0;                        // tripartite second coupling
  double t_max = 5.0;
  std::size_t steps = 501;
  SpinInit spin_init = SpinInit::css;
  OutputFormat format = OutputFormat::csv;
  std::string out_path;  // empty: stdout
  std::string svg_path;  // optional line-chart rendering
};

// Throws std::invalid_argument / std::domain_error on a spec that violates
// the contract (steps < 2, t_max <= 0, ratio outside [0,1), ...).
void validate(const RunSpec& spec);

// The artifact bytes for data-producing commands (everything except
// oracle-check, which reports through run()).
std::string render_artifact(const RunSpec& spec);

// Full run: renders, writes the artifact (or stdout), optionally writes the
// SVG chart, prints diagnostics to diag. Returns the process exit code
// (0 ok; oracle-check returns 3 when any agreement row fails).
int run(const RunSpec& spec, std::ostream& diag);

// Re-ingest the metadata block of a JSON artifact; the round trip
// render(from_json(render(spec))) is byte-identical.
RunSpec runspec_from_json(const std::string& json_text);

std::string to_string(Command c);
std::string to_string(OutputFormat f);
std::string to_string(SpinInit s);

}  // namespace swe
