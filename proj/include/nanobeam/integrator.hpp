#pragma once

// Fixed-step Stormer-Verlet propagation and dividing-surface crossing detection.

#include <optional>
#include <span>
#include <vector>

#include "nanobeam/hamiltonian.hpp"

namespace nanobeam {

struct IntegratorConfig {
  double dt = 0.01;
  double t_max = 1e6;
  double crossing_tol = 1e-10;
  double energy_tol = 1e-5;

  void validate() const;
};

/// One kick-drift-kick step.
inline ScaledState step(const ModelParams& m, ScaledState s, double dt) {
  const double h = 0.5 * dt;
  auto f = forces(m, s.A1, s.A2);
  s.p1 += h * f[0];
  s.p2 += h * f[1];
  s.A1 += dt * s.p1;
  s.A2 += dt * s.p2;
  f = forces(m, s.A1, s.A2);
  s.p1 += h * f[0];
  s.p2 += h * f[1];
  return s;
}

/// Relative energy drift normalised by max(|E0|, alpha^2 / 2).
double relative_drift(const ModelParams& m, double E0, double E);

struct CrossingEvent {
  double time;
  ScaledState state;
  int direction;  // sign of p1 at the crossing
};

/// Result of a first-crossing search; `event` is empty when censored at t_max.
struct CrossingResult {
  std::optional<CrossingEvent> event;
  double t_end;

  bool censored() const { return !event.has_value(); }
};

/// Propagates an initial condition on DS+ (A1 = 0, p1 > 0) until it first returns to A1 = 0.
CrossingResult first_crossing(const ModelParams& m, const ScaledState& s0,
                              const IntegratorConfig& cfg);

/// States at the requested (ascending) times; linear interpolation inside a step.
std::vector<ScaledState> propagate_observe(const ModelParams& m, const ScaledState& s0,
                                           std::span<const double> t_grid,
                                           const IntegratorConfig& cfg);

/// Successive DS crossings (both directions) of a single trajectory, in time order.
std::vector<CrossingEvent> crossings(const ModelParams& m, const ScaledState& s0,
                                     int max_crossings, const IntegratorConfig& cfg);

struct TimedState {
  double t;
  ScaledState state;
};

/// Samples a trajectory every `record_every` (scaled time) until it has made `max_crossings`
/// DS crossings or reached t_max; crossing points are included in the output.
std::vector<TimedState> trace(const ModelParams& m, const ScaledState& s0, int max_crossings,
                              double record_every, const IntegratorConfig& cfg);

}  // namespace nanobeam
