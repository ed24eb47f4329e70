#include <CLI11.hpp>
#include <iostream>
#include <stdexcept>

#include "swe/config_file.hpp"
#include "swe/errors.hpp"
#include "swe/run.hpp"

namespace {

struct CliOptions {
  swe::RunSpec spec;
  std::string config_path;
  std::string format = "csv";
  std::string spin_init = "css";
  std::vector<double> k_list;
  bool k_list_given = false;
  bool k2_given = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--ratio", opt.spec.ratio, "pump ratio Omega_p/Omega_c");
  cmd->add_option("--k", opt.k_list, "coupling list k_1[,k_2,...]")
      ->delimiter(',')
      ->each([&opt](const std::string&) { opt.k_list_given = true; });
  cmd->add_option("--k2", opt.spec.k2, "second coupling (tripartite/fig3)")
      ->each([&opt](const std::string&) { opt.k2_given = true; });
  cmd->add_option("--tmax", opt.spec.t_max, "time-grid end in k1*t units");
  cmd->add_option("--steps", opt.spec.steps, "number of grid points (>= 2)");
  cmd->add_option("--spin-init", opt.spin_init, "spin initial moments")
      ->check(CLI::IsMember({"css", "vacuum"}));
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.spec.out_path, "output path (default stdout)");
  cmd->add_option("--svg", opt.spec.svg_path, "optional SVG chart path");
  cmd->add_option("--config", opt.config_path, "model config file");
}

int dispatch(CliOptions& opt, swe::Command command) {
  opt.spec.command = command;
  opt.spec.format =
      opt.format == "json" ? swe::OutputFormat::json : swe::OutputFormat::csv;
  opt.spec.spin_init =
      opt.spin_init == "vacuum" ? swe::SpinInit::vacuum : swe::SpinInit::css;

  if (!opt.config_path.empty()) {
    const swe::ParsedConfig parsed = swe::parse_config_file(opt.config_path);
    opt.spec.ratio = parsed.model.pump_ratio;
    if (!opt.k_list_given) opt.k_list = parsed.model.couplings;
    if (parsed.physical) {
      const double k = swe::coupling_from_physical(*parsed.physical);
      std::cerr << "physical coupling k = " << k
                << " (informational; 1 cm^-1 corresponds to "
                << swe::seconds_per_unit_kt(1.0) * 1e12 << " ps per unit k t)\n";
      if (swe::adiabatic_warning(*parsed.physical))
        std::cerr << "warning: |omega_m/detuning| > 0.1, adiabatic "
                     "elimination is marginal\n";
    }
  }
  if (!opt.k_list.empty()) opt.spec.couplings = opt.k_list;
  // a two-entry coupling list doubles as (k1, k2) unless --k2 was explicit
  if (!opt.k2_given && opt.spec.couplings.size() >= 2)
    opt.spec.k2 = opt.spec.couplings[1];

  return swe::run(opt.spec, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-wave entangler simulator: Gaussian moment dynamics and "
               "entanglement criteria for N Stokes modes coupled to one "
               "collective spin mode"};
  app.require_subcommand(1);

  CliOptions opt;
  auto* bipartite = app.add_subcommand(
      "bipartite", "V(t) for one Stokes mode against the spin mode");
  auto* tripartite = app.add_subcommand(
      "tripartite", "three-party correlations V12/V1s/V2s with gains");
  auto* nmode = app.add_subcommand(
      "nmode", "pairwise correlations for an N-mode coupling list");
  auto* fig2 = app.add_subcommand(
      "fig2", "V(t) sweep over pump ratios 1/50, 1/20, 1/10, 1/5 at k1=1");
  auto* fig3 = app.add_subcommand(
      "fig3", "V12/V1s/V2s sweep over k2 in {0.1, 0.5, 1, 10} at k1=1");
  auto* oracle_check = app.add_subcommand(
      "oracle-check", "exact-evolution agreement and convergence battery");
  for (auto* cmd : {bipartite, tripartite, nmode, fig2, fig3, oracle_check})
    add_common_flags(cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, bad arguments exit 2
  }

  swe::Command command = swe::Command::bipartite;
  if (tripartite->parsed()) command = swe::Command::tripartite;
  if (nmode->parsed()) command = swe::Command::nmode;
  if (fig2->parsed()) command = swe::Command::fig2;
  if (fig3->parsed()) command = swe::Command::fig3;
  if (oracle_check->parsed()) command = swe::Command::oracle_check;

  try {
    return dispatch(opt, command);
  } catch (const swe::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
