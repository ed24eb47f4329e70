#include "swe/config_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace swe {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s, const std::string& key) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for '" + key + "': " + s);
  }
  if (trim(s.substr(used)).size())
    throw std::invalid_argument("config: trailing junk for '" + key + "': " + s);
  return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(trim(item), key));
  if (out.empty())
    throw std::invalid_argument("config: empty list for '" + key + "'");
  return out;
}

}  // namespace

ParsedConfig parse_config(std::istream& in) {
  bool in_physical = false;
  bool saw_ratio = false, saw_couplings = false;
  double ratio = 0.0;
  std::vector<double> couplings;
  PhysicalCoupling phys;
  bool saw_phys = false;

  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (trim(line) == "[physical]") {
        in_physical = true;
        saw_phys = true;
        continue;
      }
      throw std::invalid_argument("config: unknown section " + line);
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected 'key = value': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (!in_physical) {
      if (key == "pump_ratio") {
        ratio = parse_real(val, key);
        saw_ratio = true;
      } else if (key == "couplings") {
        couplings = parse_list(val, key);
        saw_couplings = true;
      } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
      }
    } else {
      if (key == "g23") phys.g23 = parse_real(val, key);
      else if (key == "omega_m") phys.omega_m = parse_real(val, key);
      else if (key == "n_atoms") phys.n_atoms = parse_real(val, key);
      else if (key == "detuning") phys.detuning = parse_real(val, key);
      else throw std::invalid_argument("config: unknown physical key '" + key + "'");
    }
  }

  if (!saw_ratio || !saw_couplings)
    throw std::invalid_argument(
        "config: pump_ratio and couplings are both required");

  ParsedConfig out;
  out.model = build_config(ratio, couplings);
  if (saw_phys) out.physical = phys;
  return out;
}

ParsedConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  return parse_config(in);
}

}  // namespace swe
