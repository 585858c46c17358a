#pragma once

// Gap-time ensembles on DS+(E) and the rate-theory observables built from them.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "nanobeam/integrator.hpp"
#include "nanobeam/sampling.hpp"

namespace nanobeam {

struct GapRecord {
  DsSample sample;
  double gap_time = std::numeric_limits<double>::quiet_NaN();  // NaN when censored
  bool censored = false;
  ScaledState exit_state{};
};

/// sample_ds_plus followed by first_crossing for every sample.
std::vector<GapRecord> gap_ensemble(const ModelParams& m, double E, std::size_t n, RngSeed seed,
                                    const IntegratorConfig& cfg,
                                    Execution exec = Execution::Parallel);

/// Gap times for explicit DS points (used by the DS gap map and symmetry checks).
std::vector<GapRecord> gap_times_for(const ModelParams& m, std::span<const DsSample> samples,
                                     const IntegratorConfig& cfg,
                                     Execution exec = Execution::Parallel);

struct GapStatistics {
  std::size_t n_crossing = 0;
  std::size_t n_censored = 0;
  double censored_fraction = 0.0;
  double mean_gap = 0.0;
  double mean_gap_se = 0.0;
  double flux = 0.0;
  double flux_se = 0.0;
  double reactant_dos = 0.0;
  double reactant_dos_se = 0.0;
  double crossing_dos = 0.0;  // flux * mean_gap
  double crossing_dos_se = 0.0;
  double inverse_gap_rate = 0.0;  // 1 / mean_gap
  double inverse_gap_rate_se = 0.0;
  double rrkm_rate = 0.0;  // flux / reactant_dos
  double rrkm_rate_se = 0.0;
  double min_gap = 0.0;
  double max_gap = 0.0;
};

/// Throws NoStatistics when every record is censored.
GapStatistics gap_statistics(std::span<const GapRecord> records, const McEstimate& flux,
                             const McEstimate& reactant_dos);

/// Uncensored gap times in record order.
std::vector<double> crossing_gap_times(std::span<const GapRecord> records);

struct DistributionPair {
  double bin_width = 0.0;
  std::vector<double> bin_edges;  // size = bins + 1, starting at 0
  std::vector<double> density;    // P(s), integrates to one over the uncensored mass
  std::vector<double> survival;   // F(t) on bin edges: fraction of gap times > t
  std::size_t n_used = 0;
  bool insufficient = false;      // fewer than 100 uncensored records
};

/// Bin width s_mean / 50 where s_mean is the mean over the first 500 uncensored records.
double default_bin_width(std::span<const GapRecord> records);

DistributionPair survival_and_histogram(std::span<const GapRecord> records, double bin_width);
DistributionPair survival_and_histogram(std::span<const double> gap_times, double bin_width);

/// Empirical survival function at arbitrary t.
double survival_at(std::span<const double> sorted_gaps, double t);

struct PulseFit {
  bool ok = false;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double kappa = 0.0;
  double r_squared = 0.0;
  std::size_t bins = 0;
  std::string diagnostic;
};

/// First contiguous run of bins with P above `threshold` * max(P); kappa from a
/// least-squares line through log F over that window.
PulseFit fit_pulse_decay(const DistributionPair& pair, double threshold = 0.05);

/// Single-pulse test: all bins above `threshold` * max(P) form one contiguous run.
bool is_single_pulse(const DistributionPair& pair, double threshold = 0.05);

struct FluxCorrelation {
  std::vector<double> t_grid;
  std::vector<double> W;     // product-well occupancy
  std::vector<double> W_se;  // binomial standard error of W
  std::vector<double> K;     // 2 k_RRKM (2 W - 1)
  double rrkm_rate = 0.0;
  std::size_t n_samples = 0;
};

/// Reactive-flux correlation from trajectories started uniformly on DS+(E). A1 = 0 at a grid
/// time counts one half, except at t = 0 where points count on the side they move into.
FluxCorrelation flux_correlation(const ModelParams& m, double E, std::size_t n,
                                 std::span<const double> t_grid, RngSeed seed,
                                 const IntegratorConfig& cfg,
                                 Execution exec = Execution::Parallel);

/// Same, with a caller-supplied statistical rate for the normalisation.
FluxCorrelation flux_correlation(const ModelParams& m, double E, std::size_t n,
                                 std::span<const double> t_grid, RngSeed seed,
                                 const IntegratorConfig& cfg, double rrkm_rate, Execution exec);

enum class CellStatus : std::uint8_t { Outside, Crossing, Censored };

struct GapMap {
  int resolution = 0;
  std::vector<double> A2;  // axis values, symmetric about zero
  std::vector<double> p2;
  std::vector<double> gap;          // row-major [i_p2][i_A2]; NaN when not Crossing
  std::vector<CellStatus> status;

  std::size_t index(int i_A2, int i_p2) const {
    return static_cast<std::size_t>(i_p2) * resolution + i_A2;
  }
  /// Cell inside the DS whose four neighbours are also inside.
  bool interior(int i_A2, int i_p2) const;
  /// max |s(A2, p2) - s(-A2, -p2)| / s over pairs of crossing cells.
  double symmetry_residual() const;
  /// Gap times along p2 = 0 (the middle row).
  std::vector<double> slice_p2_zero() const;
  /// Largest relative jump between horizontally or vertically adjacent interior crossing cells.
  double max_interior_jump() const;
  /// Median over crossing cells.
  double median_gap() const;
  /// Interior cells that are censored or exceed `factor` times the median gap.
  std::size_t interior_long_or_censored(double factor) const;
  std::size_t interior_censored() const;
};

/// Gap times on a resolution x resolution grid over the DS+(E) bounding box (odd resolution
/// keeps the inversion partner of every cell on the grid).
GapMap ds_gap_map(const ModelParams& m, double E, int resolution, const IntegratorConfig& cfg,
                  Execution exec = Execution::Parallel);

}  // namespace nanobeam
