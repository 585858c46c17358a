#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nanobeam/commands.hpp"
#include "nanobeam/parallel.hpp"

namespace {

struct Overrides {
  std::string config;
  std::string case_label;
  std::vector<double> energies;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  bool svg = false;
};

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "JSON configuration file");
  sub->add_option("--case", o.case_label, "preset strain case")
      ->check(CLI::IsMember({"I", "II", "III"}));
  sub->add_option("--energy", o.energies, "scaled energy (repeatable)")->take_all();
  sub->add_option("--samples", o.samples, "sample count for this command");
  sub->add_option("--seed", o.seed, "master RNG seed");
  sub->add_option("--out", o.out, "output directory");
  sub->add_option("--format", o.format, "csv, json or both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  sub->add_flag("--svg", o.svg, "also write SVG plots");
}

nanobeam::RunConfig build_config(const std::string& command, const Overrides& o) {
  using namespace nanobeam;
  RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
  if (!o.case_label.empty()) {
    select_case(cfg, parse_case(o.case_label));
    if (o.energies.empty()) cfg.energies.clear();
  }
  if (!o.energies.empty()) cfg.energies = o.energies;
  if (o.samples) {
    if (*o.samples == 0) throw ConfigError("--samples must be positive");
    if (command == "flux") cfg.samples.flux = *o.samples;
    else if (command == "dos") cfg.samples.dos = *o.samples;
    else if (command == "fluxcorr") cfg.samples.fluxcorr = *o.samples;
    else if (command == "trajectories") cfg.samples.trajectories = *o.samples;
    else cfg.samples.gaps = *o.samples;
  }
  if (o.seed) cfg.seed = *o.seed;
  if (!o.out.empty()) cfg.out = o.out;
  if (!o.format.empty()) cfg.format = parse_format(o.format);
  if (o.svg) cfg.svg = true;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode buckled nanobeam: equilibria, fluxes, densities of states and gap-time rates"};
  app.set_version_flag("--version", NANOBEAM_VERSION);
  app.require_subcommand(1);

  Overrides o;
  const std::vector<std::pair<std::string, std::string>> subs{
      {"cases", "strain presets and their derived energy scales"},
      {"derive", "derived constants for the configured beam and strain"},
      {"equilibria", "equilibrium catalogue with Hessian eigenvalues"},
      {"nhim", "normal-hyperbolicity bound and turning-point margin"},
      {"flux", "DS flux by quadrature, elliptic closed form and Monte Carlo"},
      {"dos", "reactant density of states by quadrature and Monte Carlo"},
      {"gaps", "gap-time ensembles, rates, distributions and pulse fits"},
      {"fluxcorr", "reactive-flux correlation K(t)"},
      {"dsmap", "gap times on a grid over the dividing surface"},
      {"trajectories", "individual trajectories for plotting"},
      {"report", "full rate table for a strain case"}};
  for (const auto& [name, help] : subs) add_common(app.add_subcommand(name, help), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    nanobeam::configure_threads_from_env();
    const nanobeam::RunConfig cfg = build_config(command, o);
    const nanobeam::CommandResult r = nanobeam::run_command(command, cfg);
    std::cout << r.summary.dump(2) << "\n";
    for (const auto& f : r.files) std::cerr << "wrote " << f.string() << "\n";
    return 0;
  } catch (const nanobeam::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const nanobeam::InvalidParameter& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}
