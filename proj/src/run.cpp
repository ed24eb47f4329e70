#include "swe/run.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "swe/errors.hpp"
#include "swe/oracle/agreement.hpp"
#include "swe/svg.hpp"

namespace swe {

namespace {

using nlohmann::json;

constexpr double kFig2Ratios[] = {1.0 / 50, 1.0 / 20, 1.0 / 10, 1.0 / 5};
constexpr const char* kFig2Names[] = {"1/50", "1/20", "1/10", "1/5"};
constexpr double kFig3K2[] = {0.1, 0.5, 1.0, 10.0};

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// A named column of values over the shared time grid.
struct Column {
  std::string name;
  std::vector<double> values;
};

struct Table {
  std::vector<double> t;
  std::vector<Column> columns;
};

Table bipartite_table(const RunSpec& spec) {
  const ModelConfig cfg = build_config(spec.ratio, {spec.couplings.at(0)});
  const CriteriaReport rep =
      compute_report(cfg, {spec.t_max, spec.steps}, spec.spin_init);
  return {rep.t, {{"V", rep.v}}};
}

Table tripartite_table(const RunSpec& spec) {
  const ModelConfig cfg =
      build_config(spec.ratio, {spec.couplings.at(0), spec.k2});
  const CriteriaReport rep =
      compute_report(cfg, {spec.t_max, spec.steps}, spec.spin_init);
  Table tab;
  tab.t = rep.t;
  tab.columns = {{"V", rep.v},     {"V12", rep.v12}, {"V1s", rep.v1s},
                 {"V2s", rep.v2s}, {"g1", {}},       {"g2", {}},
                 {"gs", {}}};
  for (const GainSet& g : rep.gains) {
    tab.columns[4].values.push_back(g.g1);
    tab.columns[5].values.push_back(g.g2);
    tab.columns[6].values.push_back(g.gs);
  }
  return tab;
}

Table nmode_table(const RunSpec& spec) {
  const ModelConfig cfg = build_config(spec.ratio, spec.couplings);
  const CriteriaReport rep =
      compute_report(cfg, {spec.t_max, spec.steps}, spec.spin_init);
  Table tab;
  tab.t = rep.t;
  if (rep.pair_names.empty()) {
    tab.columns.push_back({"V[1,s]", rep.v});
  } else {
    for (std::size_t c = 0; c < rep.pair_names.size(); ++c)
      tab.columns.push_back({rep.pair_names[c], rep.pair_v[c]});
  }
  return tab;
}

Table fig2_table(const RunSpec& spec) {
  Table tab;
  for (std::size_t p = 0; p < 4; ++p) {
    const ModelConfig cfg = build_config(kFig2Ratios[p], {1.0});
    const CriteriaReport rep =
        compute_report(cfg, {spec.t_max, spec.steps}, spec.spin_init);
    if (p == 0) tab.t = rep.t;
    tab.columns.push_back(
        {std::string("V[r=") + kFig2Names[p] + "]", rep.v});
  }
  return tab;
}

Table fig3_table(const RunSpec& spec) {
  Table tab;
  for (double k2 : kFig3K2) {
    const ModelConfig cfg = build_config(spec.ratio, {1.0, k2});
    const CriteriaReport rep =
        compute_report(cfg, {spec.t_max, spec.steps}, spec.spin_init);
    if (tab.t.empty()) tab.t = rep.t;
    const std::string tag = "[k2=" + fmt9(k2) + "]";
    tab.columns.push_back({"V12" + tag, rep.v12});
    tab.columns.push_back({"V1s" + tag, rep.v1s});
    tab.columns.push_back({"V2s" + tag, rep.v2s});
    Column g1{"g1" + tag, {}}, g2{"g2" + tag, {}}, gs{"gs" + tag, {}};
    for (const GainSet& g : rep.gains) {
      g1.values.push_back(g.g1);
      g2.values.push_back(g.g2);
      gs.values.push_back(g.gs);
    }
    tab.columns.push_back(std::move(g1));
    tab.columns.push_back(std::move(g2));
    tab.columns.push_back(std::move(gs));
  }
  return tab;
}

Table make_table(const RunSpec& spec) {
  switch (spec.command) {
    case Command::bipartite: return bipartite_table(spec);
    case Command::tripartite: return tripartite_table(spec);
    case Command::nmode: return nmode_table(spec);
    case Command::fig2: return fig2_table(spec);
    case Command::fig3: return fig3_table(spec);
    case Command::oracle_check: break;
  }
  throw std::logic_error("oracle-check does not render a table");
}

json spec_to_json(const RunSpec& spec) {
  json j;
  j["command"] = to_string(spec.command);
  j["ratio"] = spec.ratio;
  j["couplings"] = spec.couplings;
  j["k2"] = spec.k2;
  j["tmax"] = spec.t_max;
  j["steps"] = spec.steps;
  j["spin_init"] = to_string(spec.spin_init);
  j["format"] = to_string(spec.format);
  j["out"] = spec.out_path;
  return j;
}

std::string render_csv(const RunSpec& spec, const Table& tab) {
  std::ostringstream os;
  os << "# " << kToolVersion << "\n";
  const json meta = spec_to_json(spec);
  for (const auto& [key, value] : meta.items())
    os << "# " << key << " = " << value.dump() << "\n";
  os << "t";
  for (const Column& c : tab.columns) os << "," << c.name;
  os << "\n";
  for (std::size_t i = 0; i < tab.t.size(); ++i) {
    os << fmt9(tab.t[i]);
    for (const Column& c : tab.columns) os << "," << fmt9(c.values[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_json(const RunSpec& spec, const Table& tab) {
  json j;
  j["tool"] = kToolVersion;
  j["spec"] = spec_to_json(spec);
  json series;
  series["t"] = tab.t;
  for (const Column& c : tab.columns) series[c.name] = c.values;
  j["series"] = series;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << content;
}

int run_oracle_check(const RunSpec& spec, std::ostream& diag) {
  using namespace oracle;
  const auto rows = run_boson_agreement(default_agreement_points());
  bool all_pass = true;

  diag << "boson-oracle vs Gaussian engine\n";
  for (const auto& r : rows) {
    diag << "  " << (r.pass ? "pass" : "FAIL") << "  " << r.label
         << "  max|d|=" << fmt9(r.max_discrepancy) << "  tol=" << fmt9(r.tolerance)
         << "  tail=" << fmt9(r.truncation) << "  cutoff=" << r.cutoff << "\n";
    all_pass = all_pass && r.pass;
  }

  const DickeConvergence conv = run_dicke_convergence();
  diag << "dicke-oracle convergence (N=1, r=0, k1 t=0.5)\n";
  for (std::size_t i = 0; i < conv.n_atoms.size(); ++i)
    diag << "  N_a=" << conv.n_atoms[i]
         << "  |V_dicke - V_gauss|=" << fmt9(conv.discrepancy[i]) << "\n";
  diag << "  strictly decreasing: " << (conv.strictly_decreasing ? "yes" : "NO")
       << "; worst t=0 moment error: " << fmt9(conv.moment_error_t0) << "\n";
  all_pass = all_pass && conv.strictly_decreasing &&
             conv.moment_error_t0 <= 1e-10;

  if (!spec.out_path.empty()) {
    json j;
    j["tool"] = kToolVersion;
    j["spec"] = spec_to_json(spec);
    json pts = json::array();
    for (const auto& r : rows)
      pts.push_back({{"label", r.label},
                     {"max_discrepancy", r.max_discrepancy},
                     {"tolerance", r.tolerance},
                     {"truncation", r.truncation},
                     {"cutoff", r.cutoff},
                     {"pass", r.pass}});
    j["boson_agreement"] = pts;
    j["dicke_convergence"] = {{"n_atoms", conv.n_atoms},
                              {"discrepancy", conv.discrepancy},
                              {"strictly_decreasing", conv.strictly_decreasing},
                              {"moment_error_t0", conv.moment_error_t0}};
    j["pass"] = all_pass;
    write_file(spec.out_path, j.dump(2) + "\n");
  }
  return all_pass ? 0 : 3;
}

}  // namespace

void validate(const RunSpec& spec) {
  if (spec.steps < 2) throw std::invalid_argument("steps must be >= 2");
  if (!(spec.t_max > 0.0)) throw std::invalid_argument("tmax must be > 0");
  if (spec.couplings.empty())
    throw std::invalid_argument("couplings must be nonempty");
  // ratio and coupling values validated by build_config
  switch (spec.command) {
    case Command::bipartite:
    case Command::fig2:
      build_config(spec.ratio, {spec.couplings.at(0)});
      break;
    case Command::tripartite:
    case Command::fig3:
      build_config(spec.ratio, {spec.couplings.at(0), spec.k2});
      break;
    case Command::nmode:
      build_config(spec.ratio, spec.couplings);
      break;
    case Command::oracle_check:
      break;
  }
}

std::string render_artifact(const RunSpec& spec) {
  validate(spec);
  const Table tab = make_table(spec);
  return spec.format == OutputFormat::csv ? render_csv(spec, tab)
                                          : render_json(spec, tab);
}

int run(const RunSpec& spec, std::ostream& diag) {
  validate(spec);
  if (spec.command == Command::oracle_check) return run_oracle_check(spec, diag);

  const Table tab = make_table(spec);
  const std::string artifact = spec.format == OutputFormat::csv
                                   ? render_csv(spec, tab)
                                   : render_json(spec, tab);
  if (spec.out_path.empty())
    diag << artifact;
  else
    write_file(spec.out_path, artifact);

  if (!spec.svg_path.empty()) {
    std::vector<SvgSeries> series;
    for (const Column& c : tab.columns)
      series.push_back({c.name, &tab.t, &c.values});
    write_file(spec.svg_path,
               render_svg_chart(to_string(spec.command), series));
  }
  return 0;
}

RunSpec runspec_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  const json& s = j.contains("spec") ? j.at("spec") : j;

  RunSpec spec;
  const std::string cmd = s.at("command").get<std::string>();
  if (cmd == "bipartite") spec.command = Command::bipartite;
  else if (cmd == "tripartite") spec.command = Command::tripartite;
  else if (cmd == "nmode") spec.command = Command::nmode;
  else if (cmd == "fig2") spec.command = Command::fig2;
  else if (cmd == "fig3") spec.command = Command::fig3;
  else if (cmd == "oracle-check") spec.command = Command::oracle_check;
  else throw std::invalid_argument("unknown command in spec json: " + cmd);

  spec.ratio = s.at("ratio").get<double>();
  spec.couplings = s.at("couplings").get<std::vector<double>>();
  spec.k2 = s.at("k2").get<double>();
  spec.t_max = s.at("tmax").get<double>();
  spec.steps = s.at("steps").get<std::size_t>();
  spec.spin_init = s.at("spin_init").get<std::string>() == "vacuum"
                       ? SpinInit::vacuum
                       : SpinInit::css;
  spec.format = s.at("format").get<std::string>() == "json"
                    ? OutputFormat::json
                    : OutputFormat::csv;
  spec.out_path = s.at("out").get<std::string>();
  return spec;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::bipartite: return "bipartite";
    case Command::tripartite: return "tripartite";
    case Command::nmode: return "nmode";
    case Command::fig2: return "fig2";
    case Command::fig3: return "fig3";
    case Command::oracle_check: return "oracle-check";
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "json";
}

std::string to_string(SpinInit s) {
  return s == SpinInit::css ? "css" : "vacuum";
}

}  // namespace swe
