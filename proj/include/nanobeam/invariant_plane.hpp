#pragma once

// Reduced one-degree-of-freedom dynamics on the invariant planes
//   Pi1 = {A2 = p2 = 0},  Pi2 = {A1 = p1 = 0}
// and the normal-hyperbolicity bound for the Pi2 family of periodic orbits.

#include "nanobeam/hamiltonian.hpp"

namespace nanobeam {

enum class Plane { Pi1, Pi2 };

/// H1 = p^2/2 + alpha A^2 + A^4/2 or H2 = p^2/2 + 4 beta A^2 + 8 A^4.
double plane_energy(const ModelParams& m, Plane which, double A, double p);

/// Lowest value of H2 (0 for beta >= 0, -beta^2/2 otherwise).
double plane2_minimum_energy(const ModelParams& m);

struct NhimBound {
  double E_max;

  bool holds_at(double E) const { return E < E_max; }
};

/// E_max = (alpha^2 / 2)(1 - 2 beta / alpha); requires alpha < 0.
NhimBound nhim_energy_bound(const ModelParams& m);

/// Largest A2^2 reached on the Pi2 level set H2 = E.
double max_turning_point(const ModelParams& m, double E);

/// 4 max(A2^2) / (-alpha); a value below one certifies the exponential dichotomy at E.
double dichotomy_margin(const ModelParams& m, double E);

enum class LevelSetTopology { Empty, SingleLoop, DoubleLobe, Critical };

const char* to_string(LevelSetTopology t);

/// Shape of the Pi2 level set H2 = E (Critical: beta < 0 and E = 0, saddle plus homoclinic loops).
LevelSetTopology plane2_topology(const ModelParams& m, double E);

/// Roots u_- <= u_+ of u^2 + (beta/2) u - E/8 = 0 (u = A2^2); throws DomainError if complex.
struct QuarticRoots {
  double u_minus;
  double u_plus;
};
QuarticRoots plane2_turning_roots(const ModelParams& m, double E);

}  // namespace nanobeam
