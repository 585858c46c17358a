#include "nanobeam/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>

#include "nanobeam/hamiltonian.hpp"
#include "nanobeam/invariant_plane.hpp"
#include "nanobeam/rates.hpp"
#include "nanobeam/sampling.hpp"

namespace nanobeam {

using nlohmann::json;

std::vector<double> tabulated_energies(CaseId id) {
  switch (id) {
    case CaseId::I:
      return {1e-9, 1e-8, 1e-7};
    case CaseId::II:
      return {-2.12e-7, -2e-7, -1e-7, 1e-9, 1e-8, 1e-7};
    case CaseId::III:
      return {-4e-9, -2.5e-9, 1e-9, 1e-8, 1e-7};
  }
  return {};
}

json RunConfig::to_json() const {
  json j;
  j["beam"] = {{"elastic_modulus", beam.elastic_modulus},
               {"rest_length", beam.rest_length},
               {"width", beam.width},
               {"depth", beam.depth},
               {"mass_density", beam.mass_density}};
  j["case"] = case_label;
  j["epsilon"] = epsilon;
  j["energies"] = effective_energies(*this);
  j["samples"] = {{"flux", samples.flux},
                  {"dos", samples.dos},
                  {"gaps", samples.gaps},
                  {"fluxcorr", samples.fluxcorr},
                  {"trajectories", samples.trajectories}};
  j["integrator"] = {{"dt", integrator.dt},
                     {"t_max", integrator.t_max},
                     {"crossing_tol", integrator.crossing_tol},
                     {"energy_tol", integrator.energy_tol}};
  j["seed"] = seed;
  j["fluxcorr"] = {{"t_end", fluxcorr_t_end}, {"dt", fluxcorr_dt}};
  j["dsmap"] = {{"resolution", dsmap_resolution}};
  j["histogram"] = {{"pulse_threshold", pulse_threshold}};
  j["trajectories"] = {{"long_crossings", long_trajectory_crossings}};
  j["report"] = {{"extras", report_extras}};
  return j;
}

namespace {

template <class T>
void read_opt(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

void require_object(const json& j, const char* key) {
  if (j.contains(key) && !j.at(key).is_object()) {
    throw ConfigError(std::string("config key '") + key + "' must be an object");
  }
}

}  // namespace

void select_case(RunConfig& cfg, CaseId id) {
  const StrainCase sc = strain_case(id);
  cfg.case_label = sc.label;
  cfg.epsilon = sc.epsilon;
}

std::vector<double> effective_energies(const RunConfig& cfg) {
  if (!cfg.energies.empty()) return cfg.energies;
  if (cfg.case_label == "custom") return {};
  return tabulated_energies(parse_case(cfg.case_label));
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  RunConfig cfg;
  for (const char* k : {"beam", "samples", "integrator", "fluxcorr", "dsmap", "histogram",
                        "trajectories", "report"}) {
    require_object(j, k);
  }
  if (j.contains("beam")) {
    const json& b = j.at("beam");
    read_opt(b, "elastic_modulus", cfg.beam.elastic_modulus);
    read_opt(b, "rest_length", cfg.beam.rest_length);
    read_opt(b, "width", cfg.beam.width);
    read_opt(b, "depth", cfg.beam.depth);
    read_opt(b, "mass_density", cfg.beam.mass_density);
  }
  try {
    validate(cfg.beam);
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  if (j.contains("case") && j.contains("epsilon")) {
    throw ConfigError("give either 'case' or 'epsilon', not both");
  }
  if (j.contains("case")) {
    std::string label;
    read_opt(j, "case", label);
    try {
      select_case(cfg, parse_case(label));
    } catch (const InvalidParameter& e) {
      throw ConfigError(e.what());
    }
  } else if (j.contains("epsilon")) {
    read_opt(j, "epsilon", cfg.epsilon);
    cfg.case_label = "custom";
    if (!(cfg.epsilon < 0.0)) throw ConfigError("epsilon must be negative (compression)");
  }
  if (j.contains("energies") && j.contains("energies_K")) {
    throw ConfigError("give either 'energies' or 'energies_K', not both");
  }
  read_opt(j, "energies", cfg.energies);
  if (j.contains("energies_K")) {
    std::vector<double> kelvin;
    read_opt(j, "energies_K", kelvin);
    const double unit = derive_constants(cfg.beam, cfg.epsilon).energy_unit;
    for (const double TK : kelvin) cfg.energies.push_back(TK * kBoltzmann / unit);
  }
  if (j.contains("samples")) {
    const json& s = j.at("samples");
    read_opt(s, "flux", cfg.samples.flux);
    read_opt(s, "dos", cfg.samples.dos);
    read_opt(s, "gaps", cfg.samples.gaps);
    read_opt(s, "fluxcorr", cfg.samples.fluxcorr);
    read_opt(s, "trajectories", cfg.samples.trajectories);
  }
  if (j.contains("integrator")) {
    const json& s = j.at("integrator");
    read_opt(s, "dt", cfg.integrator.dt);
    read_opt(s, "t_max", cfg.integrator.t_max);
    read_opt(s, "crossing_tol", cfg.integrator.crossing_tol);
    read_opt(s, "energy_tol", cfg.integrator.energy_tol);
  }
  try {
    cfg.integrator.validate();
  } catch (const InvalidParameter& e) {
    throw ConfigError(e.what());
  }
  read_opt(j, "seed", cfg.seed);
  if (j.contains("out")) {
    std::string out;
    read_opt(j, "out", out);
    cfg.out = out;
  }
  if (j.contains("format")) {
    std::string f;
    read_opt(j, "format", f);
    try {
      cfg.format = parse_format(f);
    } catch (const InvalidParameter& e) {
      throw ConfigError(e.what());
    }
  }
  if (j.contains("fluxcorr")) {
    read_opt(j.at("fluxcorr"), "t_end", cfg.fluxcorr_t_end);
    read_opt(j.at("fluxcorr"), "dt", cfg.fluxcorr_dt);
  }
  if (j.contains("dsmap")) read_opt(j.at("dsmap"), "resolution", cfg.dsmap_resolution);
  if (j.contains("histogram")) read_opt(j.at("histogram"), "pulse_threshold", cfg.pulse_threshold);
  if (j.contains("trajectories")) {
    read_opt(j.at("trajectories"), "long_crossings", cfg.long_trajectory_crossings);
  }
  if (j.contains("report")) read_opt(j.at("report"), "extras", cfg.report_extras);
  read_opt(j, "svg", cfg.svg);
  if (!(cfg.fluxcorr_dt > 0.0) || !(cfg.fluxcorr_t_end > 0.0)) {
    throw ConfigError("fluxcorr.t_end and fluxcorr.dt must be positive");
  }
  if (cfg.dsmap_resolution < 3 || cfg.dsmap_resolution % 2 == 0) {
    throw ConfigError("dsmap.resolution must be odd and at least 3");
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file " + path.string());
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

namespace {

ModelParams params_of(const RunConfig& cfg) {
  return ModelParams::from(derive_constants(cfg.beam, cfg.epsilon));
}

std::string energy_tag(double E) { return "E" + format_number(E); }

std::string stem(const std::string& kind, const RunConfig& cfg, double E) {
  return kind + "_" + cfg.case_label + "_" + energy_tag(E);
}

struct Writer {
  const RunConfig& cfg;
  Provenance prov;
  CommandResult result;

  Writer(const RunConfig& c, const std::string& command)
      : cfg(c), prov(make_provenance(c.to_json(), c.seed, command)) {
    result.summary["command"] = command;
    result.summary["config_hash"] = prov.config_hash;
    result.summary["seed"] = c.seed;
    result.summary["version"] = prov.version;
  }

  void table(const std::string& name, const Table& t) {
    const auto files = write_table(cfg.out, name, t, prov, cfg.format);
    result.files.insert(result.files.end(), files.begin(), files.end());
  }

  void svg(const std::string& name, const std::string& text) {
    if (!cfg.svg) return;
    std::filesystem::create_directories(cfg.out);
    const auto path = cfg.out / (name + ".svg");
    std::ofstream(path, std::ios::binary) << text;
    result.files.push_back(path);
  }

  CommandResult finish() {
    std::filesystem::create_directories(cfg.out);
    const auto path = cfg.out / (prov.command + "_summary.json");
    std::ofstream(path, std::ios::binary) << result.summary.dump(2) << "\n";
    result.files.push_back(path);
    return std::move(result);
  }
};

// Runs `f` and converts domain failures into a status string for the row.
std::string guarded(const std::function<void()>& f) {
  try {
    f();
    return "ok";
  } catch (const PathologicalRegion& e) {
    return std::string("pathological: ") + e.what();
  } catch (const DomainError& e) {
    const std::string what = e.what();
    if (what.rfind("empty DS", 0) == 0) return "empty DS";
    if (what.find("below the well bottom") != std::string::npos) return "below well bottom";
    return "domain error: " + what;
  } catch (const NoStatistics& e) {
    return std::string("no statistics: ") + e.what();
  } catch (const UnsupportedRegime& e) {
    return std::string("unsupported: ") + e.what();
  }
}

McOptions mc_options(const RunConfig& cfg, std::uint64_t n) {
  return {n, RngSeed{cfg.seed}, Execution::Parallel};
}

}  // namespace

CommandResult cmd_cases(const RunConfig& cfg) {
  Writer w(cfg, "cases");
  Table t{{"case", "epsilon", "eps_bar", "alpha", "beta", "barrier_K", "quantum_K",
           "critical_strain"},
          {}};
  const double eps_c = critical_strain(cfg.beam);
  for (const CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
    const StrainCase sc = strain_case(id);
    const DerivedConstants c = derive_constants(cfg.beam, sc.epsilon);
    const EnergyScales s = energy_scales(cfg.beam, sc.epsilon);
    t.add_row({std::string(sc.label), sc.epsilon, c.eps_bar, c.alpha, c.beta, s.barrier_K,
               s.quantum_K, eps_c});
  }
  w.table("cases", t);
  w.result.summary["critical_strain"] = rounded(eps_c);
  return w.finish();
}

CommandResult cmd_derive(const RunConfig& cfg) {
  Writer w(cfg, "derive");
  const DerivedConstants c = derive_constants(cfg.beam, cfg.epsilon);
  Table t{{"quantity", "value"}, {}};
  t.add_row({std::string("epsilon"), c.epsilon});
  t.add_row({std::string("linear_modulus_N"), c.linear_modulus});
  t.add_row({std::string("gyration_m"), c.gyration});
  t.add_row({std::string("mass_per_length_kg_m"), c.mass_per_length});
  t.add_row({std::string("compressed_length_m"), c.compressed_length});
  t.add_row({std::string("eps_bar"), c.eps_bar});
  t.add_row({std::string("alpha"), c.alpha});
  t.add_row({std::string("beta"), c.beta});
  t.add_row({std::string("energy_unit_J"), c.energy_unit});
  t.add_row({std::string("time_unit_s"), c.time_unit});
  t.add_row({std::string("critical_strain"), critical_strain(cfg.beam)});
  if (c.alpha < 0.0) {
    const EnergyScales s = energy_scales(cfg.beam, cfg.epsilon);
    t.add_row({std::string("barrier_K"), s.barrier_K});
    t.add_row({std::string("quantum_K"), s.quantum_K});
  }
  w.table("derive", t);
  Table modes{{"n", "omega_rad_s", "stable"}, {}};
  for (int n = 1; n <= 5; ++n) {
    const ModeFrequency f = mode_frequency(cfg.beam, cfg.epsilon, n);
    modes.add_row({static_cast<std::int64_t>(n), f.omega, std::string(f.stable ? "yes" : "no")});
  }
  w.table("modes", modes);
  w.result.summary["alpha"] = rounded(c.alpha);
  w.result.summary["beta"] = rounded(c.beta);
  return w.finish();
}

CommandResult cmd_equilibria(const RunConfig& cfg) {
  Writer w(cfg, "equilibria");
  const ModelParams m = params_of(cfg);
  Table t{{"A1", "p1", "A2", "p2", "classification", "eig1_magnitude", "eig1_kind",
           "eig2_magnitude", "eig2_kind", "energy"},
          {}};
  for (const Equilibrium& e : equilibria(m)) {
    t.add_row({e.location.A1, e.location.p1, e.location.A2, e.location.p2,
               std::string(to_string(e.classification)), e.eigenvalues[0].magnitude,
               std::string(to_string(e.eigenvalues[0].kind)), e.eigenvalues[1].magnitude,
               std::string(to_string(e.eigenvalues[1].kind)), e.energy});
  }
  w.table("equilibria", t);
  w.result.summary["count"] = t.rows.size();
  return w.finish();
}

CommandResult cmd_nhim(const RunConfig& cfg) {
  Writer w(cfg, "nhim");
  const ModelParams m = params_of(cfg);
  const NhimBound b = nhim_energy_bound(m);
  Table t{{"E", "status", "E_max", "below_bound", "max_turning_point", "dichotomy_margin",
           "topology"},
          {}};
  for (const double E : effective_energies(cfg)) {
    double tp = std::nan("");
    double margin = std::nan("");
    const std::string status = guarded([&] {
      tp = max_turning_point(m, E);
      margin = dichotomy_margin(m, E);
    });
    t.add_row({E, status, b.E_max, std::string(b.holds_at(E) ? "yes" : "no"), tp, margin,
               std::string(to_string(plane2_topology(m, E)))});
  }
  w.table("nhim", t);
  w.result.summary["E_max"] = rounded(b.E_max);
  return w.finish();
}

CommandResult cmd_flux(const RunConfig& cfg) {
  Writer w(cfg, "flux");
  const ModelParams m = params_of(cfg);
  Table t{{"E", "status", "flux_quadrature", "flux_elliptic", "flux_mc", "flux_mc_se",
           "mc_samples"},
          {}};
  for (const double E : effective_energies(cfg)) {
    double q = std::nan(""), el = std::nan("");
    McEstimate mc{std::nan(""), std::nan(""), 0};
    const std::string status = guarded([&] {
      q = flux(m, E, FluxMethod::Quadrature).value;
      el = flux(m, E, FluxMethod::Elliptic).value;
      mc = flux(m, E, FluxMethod::MonteCarlo, mc_options(cfg, cfg.samples.flux));
    });
    t.add_row({E, status, q, el, mc.value, mc.std_err, static_cast<std::int64_t>(mc.n_samples)});
  }
  w.table("flux", t);
  return w.finish();
}

CommandResult cmd_dos(const RunConfig& cfg) {
  Writer w(cfg, "dos");
  const ModelParams m = params_of(cfg);
  Table t{{"E", "status", "dos_quadrature", "dos_mc", "dos_mc_se", "mc_samples"}, {}};
  for (const double E : effective_energies(cfg)) {
    double q = std::nan("");
    McEstimate mc{std::nan(""), std::nan(""), 0};
    const std::string status = guarded([&] {
      q = reactant_dos(m, E, DosMethod::Quadrature).value;
      mc = reactant_dos(m, E, DosMethod::MonteCarlo, mc_options(cfg, cfg.samples.dos));
    });
    t.add_row({E, status, q, mc.value, mc.std_err, static_cast<std::int64_t>(mc.n_samples)});
  }
  w.table("dos", t);
  return w.finish();
}

namespace {

struct EnergyAnalysis {
  std::string status = "ok";
  GapStatistics stats;
  PulseFit pulse;
  McEstimate flux_mc;
  std::vector<GapRecord> records;
  DistributionPair dist;
};

EnergyAnalysis analyse_energy(const RunConfig& cfg, const ModelParams& m, double E) {
  EnergyAnalysis a;
  a.status = guarded([&] {
    const McEstimate phi = flux(m, E, FluxMethod::Quadrature);
    const McEstimate rho = reactant_dos(m, E, DosMethod::Quadrature);
    a.flux_mc = flux(m, E, FluxMethod::MonteCarlo, mc_options(cfg, cfg.samples.flux));
    a.records = gap_ensemble(m, E, cfg.samples.gaps, RngSeed{cfg.seed}, cfg.integrator);
    a.stats = gap_statistics(a.records, phi, rho);
    a.dist = survival_and_histogram(a.records, default_bin_width(a.records));
    a.pulse = fit_pulse_decay(a.dist, cfg.pulse_threshold);
  });
  return a;
}

Table gap_summary_table() {
  return Table{{"case", "E", "status", "mean_gap", "mean_gap_se", "flux", "flux_mc_se",
                "crossing_dos", "crossing_dos_se", "reactant_dos", "k_inverse_gap", "k_inverse_gap_se",
                "k_rrkm", "kappa", "kappa_r2", "censored_fraction", "n_crossing", "min_gap"},
               {}};
}

void add_summary_row(Table& t, const RunConfig& cfg, double E, const EnergyAnalysis& a) {
  const double nan = std::nan("");
  if (a.status != "ok") {
    t.add_row({cfg.case_label, E, a.status, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan, nan,
               nan, nan, std::int64_t{0}, nan});
    return;
  }
  const GapStatistics& s = a.stats;
  t.add_row({cfg.case_label, E, a.status, s.mean_gap, s.mean_gap_se, s.flux, a.flux_mc.std_err,
             s.crossing_dos, s.crossing_dos_se, s.reactant_dos, s.inverse_gap_rate,
             s.inverse_gap_rate_se, s.rrkm_rate, a.pulse.ok ? a.pulse.kappa : nan,
             a.pulse.ok ? a.pulse.r_squared : nan, s.censored_fraction,
             static_cast<std::int64_t>(s.n_crossing), s.min_gap});
}

void write_distributions(Writer& w, const RunConfig& cfg, double E, const EnergyAnalysis& a) {
  Table rec{{"A2", "p2", "p1", "gap_time", "censored"}, {}};
  for (const auto& r : a.records) {
    rec.add_row({r.sample.A2, r.sample.p2, r.sample.p1, r.gap_time,
                 static_cast<std::int64_t>(r.censored ? 1 : 0)});
  }
  w.table(stem("gaps", cfg, E), rec);
  Table hist{{"t_lo", "t_hi", "density", "survival_lo"}, {}};
  for (std::size_t i = 0; i < a.dist.density.size(); ++i) {
    hist.add_row({a.dist.bin_edges[i], a.dist.bin_edges[i + 1], a.dist.density[i],
                  a.dist.survival[i]});
  }
  w.table(stem("distribution", cfg, E), hist);
  std::vector<double> mids;
  for (std::size_t i = 0; i < a.dist.density.size(); ++i) {
    mids.push_back(0.5 * (a.dist.bin_edges[i] + a.dist.bin_edges[i + 1]));
  }
  w.svg(stem("distribution", cfg, E), svg_line_plot(mids, {a.dist.density}, "P(s)", "s"));
}

std::vector<double> fluxcorr_grid(const RunConfig& cfg) {
  std::vector<double> g;
  const auto n = static_cast<std::size_t>(std::floor(cfg.fluxcorr_t_end / cfg.fluxcorr_dt + 1e-9));
  for (std::size_t k = 0; k <= n; ++k) g.push_back(static_cast<double>(k) * cfg.fluxcorr_dt);
  return g;
}

void run_fluxcorr(Writer& w, const RunConfig& cfg, const ModelParams& m, double E, Table& summary) {
  FluxCorrelation fc;
  const auto grid = fluxcorr_grid(cfg);
  RunConfig local = cfg;
  local.integrator.t_max = std::max(cfg.integrator.t_max, cfg.fluxcorr_t_end + cfg.integrator.dt);
  const std::string status = guarded([&] {
    fc = flux_correlation(m, E, cfg.samples.fluxcorr, grid, RngSeed{cfg.seed}, local.integrator);
  });
  if (status != "ok") {
    summary.add_row({E, status, std::nan(""), std::int64_t{0}});
    return;
  }
  Table t{{"t", "W", "W_se", "K"}, {}};
  int sign_changes = 0;
  for (std::size_t k = 0; k < fc.t_grid.size(); ++k) {
    t.add_row({fc.t_grid[k], fc.W[k], fc.W_se[k], fc.K[k]});
    if (k > 0 && (fc.K[k] > 0.0) != (fc.K[k - 1] > 0.0)) ++sign_changes;
  }
  w.table(stem("fluxcorr", cfg, E), t);
  w.svg(stem("fluxcorr", cfg, E), svg_line_plot(fc.t_grid, {fc.K}, "K(t)", "t"));
  summary.add_row({E, status, fc.rrkm_rate, static_cast<std::int64_t>(sign_changes)});
}

void run_dsmap(Writer& w, const RunConfig& cfg, const ModelParams& m, double E, Table& summary) {
  GapMap map;
  const std::string status =
      guarded([&] { map = ds_gap_map(m, E, cfg.dsmap_resolution, cfg.integrator); });
  if (status != "ok") {
    summary.add_row({E, status, std::nan(""), std::nan(""), std::int64_t{0}, std::int64_t{0}});
    return;
  }
  Table t{{"A2", "p2", "status", "gap_time"}, {}};
  const char* names[] = {"outside", "crossing", "censored"};
  for (int j = 0; j < map.resolution; ++j) {
    for (int i = 0; i < map.resolution; ++i) {
      const std::size_t k = map.index(i, j);
      t.add_row({map.A2[static_cast<std::size_t>(i)], map.p2[static_cast<std::size_t>(j)],
                 std::string(names[static_cast<int>(map.status[k])]), map.gap[k]});
    }
  }
  w.table(stem("dsmap", cfg, E), t);
  Table slice{{"A2", "gap_time"}, {}};
  const auto s = map.slice_p2_zero();
  for (int i = 0; i < map.resolution; ++i) {
    slice.add_row({map.A2[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i)]});
  }
  w.table(stem("dsmap_slice", cfg, E), slice);
  summary.add_row({E, status, map.symmetry_residual(), map.max_interior_jump(),
                   static_cast<std::int64_t>(map.interior_censored()),
                   static_cast<std::int64_t>(map.interior_long_or_censored(10.0))});
}

void run_trajectories(Writer& w, const RunConfig& cfg, const ModelParams& m, double E,
                      Table& summary) {
  std::string status = guarded([&] {
    const DsSampleSet set =
        sample_ds_plus(m, E, cfg.samples.trajectories, RngSeed{cfg.seed}, Execution::Serial);
    Table first{{"trajectory", "t", "A1", "p1", "A2", "p2"}, {}};
    for (std::size_t i = 0; i < set.samples.size(); ++i) {
      for (const TimedState& ts : trace(m, set.samples[i].state(), 1, 1.0, cfg.integrator)) {
        first.add_row({static_cast<std::int64_t>(i), ts.t, ts.state.A1, ts.state.p1, ts.state.A2,
                       ts.state.p2});
      }
    }
    w.table(stem("traj_first", cfg, E), first);
    if (!set.samples.empty()) {
      Table single{{"t", "A1", "p1", "A2", "p2"}, {}};
      for (const TimedState& ts : trace(m, set.samples[0].state(), cfg.long_trajectory_crossings,
                                        5.0, cfg.integrator)) {
        single.add_row({ts.t, ts.state.A1, ts.state.p1, ts.state.A2, ts.state.p2});
      }
      w.table(stem("traj_long", cfg, E), single);
    }
  });
  summary.add_row({E, status});
}

}  // namespace

CommandResult cmd_gaps(const RunConfig& cfg) {
  Writer w(cfg, "gaps");
  const ModelParams m = params_of(cfg);
  Table summary = gap_summary_table();
  for (const double E : effective_energies(cfg)) {
    const EnergyAnalysis a = analyse_energy(cfg, m, E);
    add_summary_row(summary, cfg, E, a);
    if (a.status == "ok") write_distributions(w, cfg, E, a);
  }
  w.table("gaps_summary_" + cfg.case_label, summary);
  return w.finish();
}

CommandResult cmd_fluxcorr(const RunConfig& cfg) {
  Writer w(cfg, "fluxcorr");
  const ModelParams m = params_of(cfg);
  Table summary{{"E", "status", "k_rrkm", "sign_changes"}, {}};
  for (const double E : effective_energies(cfg)) run_fluxcorr(w, cfg, m, E, summary);
  w.table("fluxcorr_summary_" + cfg.case_label, summary);
  return w.finish();
}

CommandResult cmd_dsmap(const RunConfig& cfg) {
  Writer w(cfg, "dsmap");
  const ModelParams m = params_of(cfg);
  Table summary{{"E", "status", "symmetry_residual", "max_interior_jump", "interior_censored",
                 "interior_long_or_censored"},
                {}};
  for (const double E : effective_energies(cfg)) run_dsmap(w, cfg, m, E, summary);
  w.table("dsmap_summary_" + cfg.case_label, summary);
  return w.finish();
}

CommandResult cmd_trajectories(const RunConfig& cfg) {
  Writer w(cfg, "trajectories");
  const ModelParams m = params_of(cfg);
  Table summary{{"E", "status"}, {}};
  for (const double E : effective_energies(cfg)) run_trajectories(w, cfg, m, E, summary);
  w.table("trajectories_summary_" + cfg.case_label, summary);
  return w.finish();
}

CommandResult cmd_report(const RunConfig& cfg) {
  Writer w(cfg, "report");
  const ModelParams m = params_of(cfg);
  Table rows = gap_summary_table();
  Table fc_summary{{"E", "status", "k_rrkm", "sign_changes"}, {}};
  Table map_summary{{"E", "status", "symmetry_residual", "max_interior_jump", "interior_censored",
                     "interior_long_or_censored"},
                    {}};
  Table traj_summary{{"E", "status"}, {}};
  for (const double E : effective_energies(cfg)) {
    const EnergyAnalysis a = analyse_energy(cfg, m, E);
    add_summary_row(rows, cfg, E, a);
    if (a.status != "ok" || !cfg.report_extras) continue;
    write_distributions(w, cfg, E, a);
    run_fluxcorr(w, cfg, m, E, fc_summary);
    run_dsmap(w, cfg, m, E, map_summary);
    run_trajectories(w, cfg, m, E, traj_summary);
  }
  w.table("report_" + cfg.case_label, rows);
  if (cfg.report_extras) {
    w.table("fluxcorr_summary_" + cfg.case_label, fc_summary);
    w.table("dsmap_summary_" + cfg.case_label, map_summary);
    w.table("trajectories_summary_" + cfg.case_label, traj_summary);
  }
  json jrows = json::array();
  for (const auto& r : rows.rows) jrows.push_back(std::get<std::string>(r[2]));
  w.result.summary["row_status"] = jrows;
  return w.finish();
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"cases",    "derive", "equilibria", "nhim",
                                              "flux",     "dos",    "gaps",       "fluxcorr",
                                              "dsmap",    "trajectories", "report"};
  return names;
}

CommandResult run_command(const std::string& name, const RunConfig& cfg) {
  static const std::map<std::string, CommandResult (*)(const RunConfig&)> table{
      {"cases", cmd_cases},       {"derive", cmd_derive}, {"equilibria", cmd_equilibria},
      {"nhim", cmd_nhim},         {"flux", cmd_flux},     {"dos", cmd_dos},
      {"gaps", cmd_gaps},         {"fluxcorr", cmd_fluxcorr}, {"dsmap", cmd_dsmap},
      {"trajectories", cmd_trajectories}, {"report", cmd_report}};
  const auto it = table.find(name);
  if (it == table.end()) throw ConfigError("unknown command '" + name + "'");
  return it->second(cfg);
}

}  // namespace nanobeam
