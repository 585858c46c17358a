#include "nanobeam/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "nanobeam/error.hpp"

namespace nanobeam {

void IntegratorConfig::validate() const {
  if (!(dt > 0.0)) throw InvalidParameter("integrator.dt must be positive");
  if (!(t_max > dt)) throw InvalidParameter("integrator.t_max must exceed dt");
  if (!(crossing_tol > 0.0)) throw InvalidParameter("integrator.crossing_tol must be positive");
  if (!(energy_tol > 0.0)) throw InvalidParameter("integrator.energy_tol must be positive");
}

double relative_drift(const ModelParams& m, double E0, double E) {
  const double scale = std::max(std::abs(E0), 0.5 * m.alpha * m.alpha);
  return std::abs(E - E0) / scale;
}

namespace {

void check_energy(const ModelParams& m, double E0, const ScaledState& s,
                  const IntegratorConfig& cfg, double t) {
  const double E = total_energy(m, s);
  if (!std::isfinite(E) || relative_drift(m, E0, E) > cfg.energy_tol) {
    throw IntegrationError("energy drift " + std::to_string(relative_drift(m, E0, E)) +
                           " exceeds tolerance at t = " + std::to_string(t));
  }
}

// Bisection on a partial step from `from`, which sits on the positive side (sign * A1 > 0).
CrossingEvent refine(const ModelParams& m, const ScaledState& from, double t0, double dt,
                     double sign, double tol) {
  double lo = 0.0;
  double hi = dt;
  ScaledState best = step(m, from, hi);
  double best_tau = hi;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const ScaledState s = step(m, from, mid);
    if (std::abs(s.A1) < std::abs(best.A1)) {
      best = s;
      best_tau = mid;
    }
    if (std::abs(s.A1) < tol) break;
    if (sign * s.A1 > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {t0 + best_tau, best, best.p1 > 0.0 ? 1 : -1};
}

}  // namespace

CrossingResult first_crossing(const ModelParams& m, const ScaledState& s0,
                              const IntegratorConfig& cfg) {
  const double E0 = total_energy(m, s0);
  const double dt = cfg.dt;
  const auto n_max = static_cast<std::int64_t>(std::ceil(cfg.t_max / dt));
  ScaledState cur = s0;
  for (std::int64_t n = 0; n < n_max; ++n) {
    const ScaledState next = step(m, cur, dt);
    if (cur.A1 > 0.0 && next.A1 <= 0.0) {
      const CrossingEvent ev = refine(m, cur, static_cast<double>(n) * dt, dt, 1.0, cfg.crossing_tol);
      check_energy(m, E0, ev.state, cfg, ev.time);
      return {ev, ev.time};
    }
    cur = next;
  }
  check_energy(m, E0, cur, cfg, cfg.t_max);
  return {std::nullopt, static_cast<double>(n_max) * dt};
}

std::vector<ScaledState> propagate_observe(const ModelParams& m, const ScaledState& s0,
                                           std::span<const double> t_grid,
                                           const IntegratorConfig& cfg) {
  std::vector<ScaledState> out;
  out.reserve(t_grid.size());
  const double E0 = total_energy(m, s0);
  const double dt = cfg.dt;
  const double eps = 1e-9 * dt;
  std::int64_t n = 0;
  ScaledState cur = s0;
  double prev_t = -1.0;
  for (const double tg : t_grid) {
    if (tg < prev_t) throw InvalidParameter("observation grid must be ascending");
    if (tg < 0.0 || tg > cfg.t_max) throw InvalidParameter("observation time outside [0, t_max]");
    prev_t = tg;
    while (static_cast<double>(n + 1) * dt <= tg + eps) {
      cur = step(m, cur, dt);
      ++n;
    }
    const double frac = (tg - static_cast<double>(n) * dt) / dt;
    if (frac <= 1e-9) {
      out.push_back(cur);
    } else {
      const ScaledState nx = step(m, cur, dt);
      const double w = frac;
      out.push_back({cur.A1 + w * (nx.A1 - cur.A1), cur.p1 + w * (nx.p1 - cur.p1),
                     cur.A2 + w * (nx.A2 - cur.A2), cur.p2 + w * (nx.p2 - cur.p2)});
    }
  }
  check_energy(m, E0, cur, cfg, static_cast<double>(n) * dt);
  return out;
}

std::vector<CrossingEvent> crossings(const ModelParams& m, const ScaledState& s0,
                                     int max_crossings, const IntegratorConfig& cfg) {
  std::vector<CrossingEvent> out;
  const double E0 = total_energy(m, s0);
  const double dt = cfg.dt;
  const auto n_max = static_cast<std::int64_t>(std::ceil(cfg.t_max / dt));
  ScaledState cur = s0;
  // Side of the DS the trajectory is on; an initial point on the DS takes the side it moves to.
  double side = s0.A1 != 0.0 ? (s0.A1 > 0.0 ? 1.0 : -1.0) : (s0.p1 >= 0.0 ? 1.0 : -1.0);
  for (std::int64_t n = 0; n < n_max && static_cast<int>(out.size()) < max_crossings; ++n) {
    const ScaledState next = step(m, cur, dt);
    if (side * next.A1 <= 0.0 && side * cur.A1 >= 0.0 && !(cur.A1 == 0.0 && n == 0)) {
      out.push_back(refine(m, cur, static_cast<double>(n) * dt, dt, side, cfg.crossing_tol));
      side = -side;
    }
    cur = next;
  }
  check_energy(m, E0, cur, cfg, static_cast<double>(out.empty() ? 0.0 : out.back().time));
  return out;
}

std::vector<TimedState> trace(const ModelParams& m, const ScaledState& s0, int max_crossings,
                              double record_every, const IntegratorConfig& cfg) {
  const double dt = cfg.dt;
  const auto stride = std::max<std::int64_t>(1, std::llround(record_every / dt));
  const auto n_max = static_cast<std::int64_t>(std::ceil(cfg.t_max / dt));
  std::vector<TimedState> out{{0.0, s0}};
  ScaledState cur = s0;
  double side = s0.A1 != 0.0 ? (s0.A1 > 0.0 ? 1.0 : -1.0) : (s0.p1 >= 0.0 ? 1.0 : -1.0);
  int seen = 0;
  for (std::int64_t n = 0; n < n_max && seen < max_crossings; ++n) {
    const ScaledState next = step(m, cur, dt);
    if (side * next.A1 <= 0.0 && side * cur.A1 >= 0.0 && !(cur.A1 == 0.0 && n == 0)) {
      const CrossingEvent ev = refine(m, cur, static_cast<double>(n) * dt, dt, side, cfg.crossing_tol);
      out.push_back({ev.time, ev.state});
      side = -side;
      ++seen;
    }
    cur = next;
    if ((n + 1) % stride == 0 && seen < max_crossings) {
      out.push_back({static_cast<double>(n + 1) * dt, cur});
    }
  }
  return out;
}

}  // namespace nanobeam
