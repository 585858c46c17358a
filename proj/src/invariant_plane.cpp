#include "nanobeam/invariant_plane.hpp"

#include <cmath>
#include <string>

#include "nanobeam/error.hpp"

namespace nanobeam {

double plane_energy(const ModelParams& m, Plane which, double A, double p) {
  const double A2 = A * A;
  if (which == Plane::Pi1) return 0.5 * p * p + m.alpha * A2 + 0.5 * A2 * A2;
  return 0.5 * p * p + 4.0 * m.beta * A2 + 8.0 * A2 * A2;
}

double plane2_minimum_energy(const ModelParams& m) {
  return m.beta < 0.0 ? -0.5 * m.beta * m.beta : 0.0;
}

NhimBound nhim_energy_bound(const ModelParams& m) {
  if (!(m.alpha < 0.0)) throw UnsupportedRegime("NHIM bound requires alpha < 0");
  return {0.5 * m.alpha * m.alpha * (1.0 - 2.0 * m.beta / m.alpha)};
}

QuarticRoots plane2_turning_roots(const ModelParams& m, double E) {
  const double disc = m.beta * m.beta + 2.0 * E;
  if (disc < 0.0) {
    throw DomainError("Pi2 level set H2 = " + std::to_string(E) + " is empty");
  }
  const double r = 0.25 * std::sqrt(disc);
  return {-0.25 * m.beta - r, -0.25 * m.beta + r};
}

double max_turning_point(const ModelParams& m, double E) {
  const auto roots = plane2_turning_roots(m, E);
  if (m.beta >= 0.0 && E < 0.0) {
    throw DomainError("Pi2 level set is empty for beta >= 0 and E < 0");
  }
  return roots.u_plus;
}

double dichotomy_margin(const ModelParams& m, double E) {
  if (!(m.alpha < 0.0)) throw UnsupportedRegime("dichotomy margin requires alpha < 0");
  return 4.0 * max_turning_point(m, E) / (-m.alpha);
}

const char* to_string(LevelSetTopology t) {
  switch (t) {
    case LevelSetTopology::Empty:
      return "empty";
    case LevelSetTopology::SingleLoop:
      return "single-loop";
    case LevelSetTopology::DoubleLobe:
      return "double-lobe";
    case LevelSetTopology::Critical:
      return "critical";
  }
  return "?";
}

LevelSetTopology plane2_topology(const ModelParams& m, double E) {
  const double emin = plane2_minimum_energy(m);
  if (m.beta < 0.0) {
    if (!(E > emin)) return LevelSetTopology::Empty;
    if (E < 0.0) return LevelSetTopology::DoubleLobe;
    if (E == 0.0) return LevelSetTopology::Critical;
    return LevelSetTopology::SingleLoop;
  }
  if (!(E > 0.0)) return LevelSetTopology::Empty;
  return LevelSetTopology::SingleLoop;
}

}  // namespace nanobeam
