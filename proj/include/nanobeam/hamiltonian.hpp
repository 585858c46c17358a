#pragma once

// Scaled two-mode Hamiltonian
//   H = p1^2/2 + p2^2/2 + alpha A1^2 + 4 beta A2^2 + (A1^2 + 4 A2^2)^2 / 2

#include <array>
#include <vector>

namespace nanobeam {

struct DerivedConstants;

struct ModelParams {
  double alpha;
  double beta;

  static ModelParams from(const DerivedConstants& c);
};

/// Dimensionless phase point (A1, p1, A2, p2).
struct ScaledState {
  double A1 = 0.0;
  double p1 = 0.0;
  double A2 = 0.0;
  double p2 = 0.0;

  friend bool operator==(const ScaledState&, const ScaledState&) = default;
};

inline double potential(const ModelParams& m, double A1, double A2) {
  const double q = A1 * A1 + 4.0 * A2 * A2;
  return m.alpha * A1 * A1 + 4.0 * m.beta * A2 * A2 + 0.5 * q * q;
}

inline double total_energy(const ModelParams& m, const ScaledState& s) {
  return 0.5 * (s.p1 * s.p1 + s.p2 * s.p2) + potential(m, s.A1, s.A2);
}

/// Forces (-dV/dA1, -dV/dA2).
inline std::array<double, 2> forces(const ModelParams& m, double A1, double A2) {
  const double q = A1 * A1 + 4.0 * A2 * A2;
  return {-2.0 * A1 * (m.alpha + q), -8.0 * A2 * (m.beta + q)};
}

/// Time derivatives in state order (dA1, dp1, dA2, dp2).
inline std::array<double, 4> eom_rhs(const ModelParams& m, const ScaledState& s) {
  const auto f = forces(m, s.A1, s.A2);
  return {s.p1, f[0], s.p2, f[1]};
}

enum class EigenKind { RealPair, ImaginaryPair, Zero };

/// A +/- pair of linearisation eigenvalues stored as a magnitude and its kind.
struct EigenPair {
  double magnitude;
  EigenKind kind;
};

enum class Classification { Minimum, Index1Saddle, Index2Saddle, Degenerate };

const char* to_string(Classification c);
const char* to_string(EigenKind k);

struct Equilibrium {
  ScaledState location;
  Classification classification;
  std::array<EigenPair, 2> eigenvalues;
  double energy;
};

/// Eigenvalue pair of the 1-D linearisation x'' = -curvature x.
EigenPair eigen_pair_from_curvature(double curvature);

/// Complete equilibrium catalogue; throws UnsupportedRegime for alpha >= 0.
std::vector<Equilibrium> equilibria(const ModelParams& m);

}  // namespace nanobeam
