#include "nanobeam/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nanobeam/error.hpp"
#include "nanobeam/invariant_plane.hpp"

namespace nanobeam {

std::vector<GapRecord> gap_times_for(const ModelParams& m, std::span<const DsSample> samples,
                                     const IntegratorConfig& cfg, Execution exec) {
  cfg.validate();
  std::vector<GapRecord> out(samples.size());
  for_each_index(samples.size(), exec, [&](std::size_t i) {
    GapRecord r;
    r.sample = samples[i];
    const CrossingResult c = first_crossing(m, samples[i].state(), cfg);
    if (c.censored()) {
      r.censored = true;
    } else {
      r.gap_time = c.event->time;
      r.exit_state = c.event->state;
    }
    out[i] = r;
  });
  return out;
}

std::vector<GapRecord> gap_ensemble(const ModelParams& m, double E, std::size_t n, RngSeed seed,
                                    const IntegratorConfig& cfg, Execution exec) {
  const DsSampleSet set = sample_ds_plus(m, E, n, seed, exec);
  return gap_times_for(m, set.samples, cfg, exec);
}

std::vector<double> crossing_gap_times(std::span<const GapRecord> records) {
  std::vector<double> g;
  g.reserve(records.size());
  for (const auto& r : records) {
    if (!r.censored) g.push_back(r.gap_time);
  }
  return g;
}

GapStatistics gap_statistics(std::span<const GapRecord> records, const McEstimate& flux,
                             const McEstimate& reactant_dos) {
  const std::vector<double> g = crossing_gap_times(records);
  if (g.empty()) throw NoStatistics("all gap-time records are censored");
  GapStatistics st;
  st.n_crossing = g.size();
  st.n_censored = records.size() - g.size();
  st.censored_fraction = static_cast<double>(st.n_censored) / static_cast<double>(records.size());
  const double n = static_cast<double>(g.size());
  st.mean_gap = pairwise_sum(g) / n;
  std::vector<double> sq(g.size());
  std::transform(g.begin(), g.end(), sq.begin(),
                 [&](double x) { return (x - st.mean_gap) * (x - st.mean_gap); });
  const double var = g.size() > 1 ? pairwise_sum(sq) / (n - 1.0) : 0.0;
  st.mean_gap_se = std::sqrt(var / n);
  st.min_gap = *std::min_element(g.begin(), g.end());
  st.max_gap = *std::max_element(g.begin(), g.end());

  st.flux = flux.value;
  st.flux_se = flux.std_err;
  st.reactant_dos = reactant_dos.value;
  st.reactant_dos_se = reactant_dos.std_err;
  st.crossing_dos = st.flux * st.mean_gap;
  st.crossing_dos_se = std::hypot(st.flux_se * st.mean_gap, st.flux * st.mean_gap_se);
  st.inverse_gap_rate = 1.0 / st.mean_gap;
  st.inverse_gap_rate_se = st.mean_gap_se / (st.mean_gap * st.mean_gap);
  st.rrkm_rate = st.flux / st.reactant_dos;
  st.rrkm_rate_se = st.rrkm_rate * std::hypot(st.flux_se / st.flux,
                                              st.reactant_dos_se / st.reactant_dos);
  return st;
}

double default_bin_width(std::span<const GapRecord> records) {
  double sum = 0.0;
  std::size_t k = 0;
  for (const auto& r : records) {
    if (r.censored) continue;
    sum += r.gap_time;
    if (++k == 500) break;
  }
  if (k == 0) throw NoStatistics("no uncensored records for the pilot bin width");
  return sum / static_cast<double>(k) / 50.0;
}

double survival_at(std::span<const double> sorted_gaps, double t) {
  if (sorted_gaps.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_gaps.begin(), sorted_gaps.end(), t);
  return static_cast<double>(sorted_gaps.end() - it) / static_cast<double>(sorted_gaps.size());
}

DistributionPair survival_and_histogram(std::span<const double> gap_times, double bin_width) {
  if (!(bin_width > 0.0)) throw InvalidParameter("histogram bin width must be positive");
  DistributionPair d;
  d.bin_width = bin_width;
  std::vector<double> g(gap_times.begin(), gap_times.end());
  std::sort(g.begin(), g.end());
  d.n_used = g.size();
  d.insufficient = g.size() < 100;
  const double top = g.empty() ? bin_width : g.back();
  const auto bins = static_cast<std::size_t>(std::floor(top / bin_width)) + 1;
  if (bins > 50'000'000) throw InvalidParameter("histogram would exceed 5e7 bins");
  d.bin_edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) d.bin_edges[i] = static_cast<double>(i) * bin_width;
  std::vector<std::uint64_t> counts(bins, 0);
  for (const double s : g) {
    const auto b = std::min(bins - 1, static_cast<std::size_t>(s / bin_width));
    ++counts[b];
  }
  d.density.resize(bins);
  const double norm = g.empty() ? 0.0 : 1.0 / (static_cast<double>(g.size()) * bin_width);
  for (std::size_t i = 0; i < bins; ++i) d.density[i] = static_cast<double>(counts[i]) * norm;
  d.survival.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) d.survival[i] = survival_at(g, d.bin_edges[i]);
  if (!g.empty()) d.survival[0] = 1.0;
  return d;
}

DistributionPair survival_and_histogram(std::span<const GapRecord> records, double bin_width) {
  const std::vector<double> g = crossing_gap_times(records);
  return survival_and_histogram(std::span<const double>(g), bin_width);
}

namespace {

struct Run {
  std::size_t begin;
  std::size_t end;
};

std::vector<Run> runs_above(const std::vector<double>& P, double threshold) {
  std::vector<Run> runs;
  if (P.empty()) return runs;
  const double cut = threshold * *std::max_element(P.begin(), P.end());
  std::size_t i = 0;
  while (i < P.size()) {
    if (P[i] > cut) {
      std::size_t j = i;
      while (j < P.size() && P[j] > cut) ++j;
      runs.push_back({i, j});
      i = j;
    } else {
      ++i;
    }
  }
  return runs;
}

}  // namespace

bool is_single_pulse(const DistributionPair& pair, double threshold) {
  return runs_above(pair.density, threshold).size() == 1;
}

PulseFit fit_pulse_decay(const DistributionPair& pair, double threshold) {
  PulseFit fit;
  const auto runs = runs_above(pair.density, threshold);
  if (runs.empty()) {
    fit.diagnostic = "empty histogram";
    return fit;
  }
  const Run r = runs.front();
  fit.t_lo = pair.bin_edges[r.begin];
  fit.t_hi = pair.bin_edges[r.end];
  fit.bins = r.end - r.begin;
  std::vector<double> x;
  std::vector<double> y;
  for (std::size_t i = r.begin; i <= r.end; ++i) {
    if (pair.survival[i] > 0.0) {
      x.push_back(pair.bin_edges[i]);
      y.push_back(std::log(pair.survival[i]));
    }
  }
  if (x.size() < 2) {
    fit.diagnostic = "pulse window holds fewer than two points with F > 0";
    return fit;
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  fit.kappa = -slope;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  if (!(fit.kappa > 0.0)) {
    fit.diagnostic = "log F does not decay over the pulse window";
    return fit;
  }
  fit.ok = true;
  return fit;
}

FluxCorrelation flux_correlation(const ModelParams& m, double E, std::size_t n,
                                 std::span<const double> t_grid, RngSeed seed,
                                 const IntegratorConfig& cfg, double rrkm_rate, Execution exec) {
  cfg.validate();
  const DsSampleSet set = sample_ds_plus(m, E, n, seed, exec);
  const std::size_t G = t_grid.size();
  // Occupancy in half units: 0 reactant, 1 on the DS, 2 product.
  std::vector<std::uint8_t> occ(n * G, 0);
  for_each_index(n, exec, [&](std::size_t i) {
    const auto states = propagate_observe(m, set.samples[i].state(), t_grid, cfg);
    for (std::size_t k = 0; k < G; ++k) {
      const ScaledState& s = states[k];
      std::uint8_t v;
      if (s.A1 > 0.0) {
        v = 2;
      } else if (s.A1 < 0.0) {
        v = 0;
      } else if (t_grid[k] == 0.0) {
        v = s.p1 > 0.0 ? 2 : (s.p1 < 0.0 ? 0 : 1);
      } else {
        v = 1;
      }
      occ[i * G + k] = v;
    }
  });
  FluxCorrelation fc;
  fc.t_grid.assign(t_grid.begin(), t_grid.end());
  fc.rrkm_rate = rrkm_rate;
  fc.n_samples = n;
  fc.W.resize(G);
  fc.W_se.resize(G);
  fc.K.resize(G);
  for (std::size_t k = 0; k < G; ++k) {
    std::uint64_t halves = 0;
    for (std::size_t i = 0; i < n; ++i) halves += occ[i * G + k];
    const double W = static_cast<double>(halves) / (2.0 * static_cast<double>(n));
    fc.W[k] = W;
    fc.W_se[k] = std::sqrt(std::max(W * (1.0 - W), 0.0) / static_cast<double>(n));
    fc.K[k] = 2.0 * rrkm_rate * (2.0 * W - 1.0);
  }
  return fc;
}

FluxCorrelation flux_correlation(const ModelParams& m, double E, std::size_t n,
                                 std::span<const double> t_grid, RngSeed seed,
                                 const IntegratorConfig& cfg, Execution exec) {
  const double phi = flux(m, E, FluxMethod::Quadrature).value;
  const double rho = reactant_dos(m, E, DosMethod::Quadrature).value;
  return flux_correlation(m, E, n, t_grid, seed, cfg, phi / rho, exec);
}

bool GapMap::interior(int i, int j) const {
  if (i <= 0 || j <= 0 || i >= resolution - 1 || j >= resolution - 1) return false;
  auto in = [&](int a, int b) { return status[index(a, b)] != CellStatus::Outside; };
  return in(i, j) && in(i - 1, j) && in(i + 1, j) && in(i, j - 1) && in(i, j + 1);
}

double GapMap::symmetry_residual() const {
  double worst = 0.0;
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      const std::size_t a = index(i, j);
      const std::size_t b = index(resolution - 1 - i, resolution - 1 - j);
      if (status[a] != CellStatus::Crossing || status[b] != CellStatus::Crossing) continue;
      worst = std::max(worst, std::abs(gap[a] - gap[b]) / std::min(gap[a], gap[b]));
    }
  }
  return worst;
}

std::vector<double> GapMap::slice_p2_zero() const {
  const int mid = resolution / 2;
  std::vector<double> out(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) out[static_cast<std::size_t>(i)] = gap[index(i, mid)];
  return out;
}

double GapMap::max_interior_jump() const {
  double worst = 0.0;
  auto ok = [&](int i, int j) {
    return interior(i, j) && status[index(i, j)] == CellStatus::Crossing;
  };
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      if (!ok(i, j)) continue;
      const double s = gap[index(i, j)];
      for (const auto& [di, dj] : {std::pair{1, 0}, std::pair{0, 1}}) {
        if (!ok(i + di, j + dj)) continue;
        const double t = gap[index(i + di, j + dj)];
        worst = std::max(worst, std::abs(s - t) / std::min(s, t));
      }
    }
  }
  return worst;
}

double GapMap::median_gap() const {
  std::vector<double> g;
  for (std::size_t k = 0; k < gap.size(); ++k) {
    if (status[k] == CellStatus::Crossing) g.push_back(gap[k]);
  }
  if (g.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::nth_element(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(g.size() / 2), g.end());
  return g[g.size() / 2];
}

std::size_t GapMap::interior_long_or_censored(double factor) const {
  const double cut = factor * median_gap();
  std::size_t count = 0;
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      if (!interior(i, j)) continue;
      const std::size_t k = index(i, j);
      count += status[k] == CellStatus::Censored || gap[k] > cut;
    }
  }
  return count;
}

std::size_t GapMap::interior_censored() const {
  std::size_t count = 0;
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      count += interior(i, j) && status[index(i, j)] == CellStatus::Censored;
    }
  }
  return count;
}

GapMap ds_gap_map(const ModelParams& m, double E, int resolution, const IntegratorConfig& cfg,
                  Execution exec) {
  if (resolution < 3 || resolution % 2 == 0) {
    throw InvalidParameter("gap map resolution must be odd and at least 3");
  }
  const DsBox box = ds_bounding_box(m, E);
  GapMap map;
  map.resolution = resolution;
  const int c = (resolution - 1) / 2;
  const double hA = box.A2_max / c;
  const double hp = box.p2_max / c;
  for (int i = 0; i < resolution; ++i) {
    map.A2.push_back(static_cast<double>(i - c) * hA);
    map.p2.push_back(static_cast<double>(i - c) * hp);
  }
  const auto cells = static_cast<std::size_t>(resolution) * resolution;
  map.gap.assign(cells, std::numeric_limits<double>::quiet_NaN());
  map.status.assign(cells, CellStatus::Outside);
  std::vector<DsSample> samples;
  std::vector<std::size_t> where;
  for (int j = 0; j < resolution; ++j) {
    for (int i = 0; i < resolution; ++i) {
      const double A = map.A2[static_cast<std::size_t>(i)];
      const double p = map.p2[static_cast<std::size_t>(j)];
      const double h = plane_energy(m, Plane::Pi2, A, p);
      if (h < E) {
        samples.push_back({A, p, std::sqrt(2.0 * (E - h))});
        where.push_back(map.index(i, j));
      }
    }
  }
  const auto records = gap_times_for(m, samples, cfg, exec);
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (records[k].censored) {
      map.status[where[k]] = CellStatus::Censored;
    } else {
      map.status[where[k]] = CellStatus::Crossing;
      map.gap[where[k]] = records[k].gap_time;
    }
  }
  return map;
}

}  // namespace nanobeam
