#pragma once

// Subcommand implementations behind the command-line front end. Each command writes its
// tables into the output directory and returns a JSON summary.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nanobeam/beam_model.hpp"
#include "nanobeam/error.hpp"
#include "nanobeam/integrator.hpp"
#include "nanobeam/output.hpp"

namespace nanobeam {

/// Malformed or inconsistent run configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct SampleSizes {
  std::uint64_t flux = 100000;
  std::uint64_t dos = 1000000;
  std::uint64_t gaps = 10000;
  std::uint64_t fluxcorr = 2000;
  std::uint64_t trajectories = 20;
};

struct RunConfig {
  PhysicalBeam beam = PhysicalBeam::silicon_reference();
  std::string case_label = "I";  // preset name, or "custom" when epsilon is given explicitly
  double epsilon = strain_case(CaseId::I).epsilon;
  std::vector<double> energies;  // scaled units; empty selects the preset's tabulated energies
  SampleSizes samples;
  IntegratorConfig integrator;
  std::uint64_t seed = 1;
  std::filesystem::path out = "nanobeam_out";
  OutputFormat format = OutputFormat::Both;
  double fluxcorr_t_end = 5000.0;
  double fluxcorr_dt = 5.0;
  int dsmap_resolution = 101;
  double pulse_threshold = 0.05;
  int long_trajectory_crossings = 200;
  bool report_extras = true;  // distributions, K(t), gap maps and trajectories alongside the report
  bool svg = false;

  nlohmann::json to_json() const;
};

/// Energies (scaled) used in the published tables for each preset strain case.
std::vector<double> tabulated_energies(CaseId id);

/// Builds a configuration from a JSON document; throws ConfigError on bad input.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);

/// Preset selection: resets epsilon and, when no energies were given, the energy list.
void select_case(RunConfig& cfg, CaseId id);

/// Energies to analyse: the configured list or the preset's tabulated energies.
std::vector<double> effective_energies(const RunConfig& cfg);

struct CommandResult {
  std::vector<std::filesystem::path> files;
  nlohmann::json summary;
};

CommandResult cmd_cases(const RunConfig& cfg);
CommandResult cmd_derive(const RunConfig& cfg);
CommandResult cmd_equilibria(const RunConfig& cfg);
CommandResult cmd_nhim(const RunConfig& cfg);
CommandResult cmd_flux(const RunConfig& cfg);
CommandResult cmd_dos(const RunConfig& cfg);
CommandResult cmd_gaps(const RunConfig& cfg);
CommandResult cmd_fluxcorr(const RunConfig& cfg);
CommandResult cmd_dsmap(const RunConfig& cfg);
CommandResult cmd_trajectories(const RunConfig& cfg);
CommandResult cmd_report(const RunConfig& cfg);

/// Dispatches by subcommand name; throws ConfigError for an unknown name.
CommandResult run_command(const std::string& name, const RunConfig& cfg);
const std::vector<std::string>& command_names();

}  // namespace nanobeam
