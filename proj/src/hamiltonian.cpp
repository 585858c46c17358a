#include "nanobeam/hamiltonian.hpp"

#include <cmath>

#include "nanobeam/beam_model.hpp"
#include "nanobeam/error.hpp"

namespace nanobeam {

ModelParams ModelParams::from(const DerivedConstants& c) { return {c.alpha, c.beta}; }

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Minimum:
      return "minimum";
    case Classification::Index1Saddle:
      return "index-1 saddle";
    case Classification::Index2Saddle:
      return "index-2 saddle";
    case Classification::Degenerate:
      return "degenerate";
  }
  return "?";
}

const char* to_string(EigenKind k) {
  switch (k) {
    case EigenKind::RealPair:
      return "real";
    case EigenKind::ImaginaryPair:
      return "imaginary";
    case EigenKind::Zero:
      return "zero";
  }
  return "?";
}

EigenPair eigen_pair_from_curvature(double curvature) {
  // lambda^2 = -curvature
  if (curvature == 0.0) return {0.0, EigenKind::Zero};
  if (curvature < 0.0) return {std::sqrt(-curvature), EigenKind::RealPair};
  return {std::sqrt(curvature), EigenKind::ImaginaryPair};
}

namespace {

Equilibrium make_equilibrium(const ModelParams& m, double A1, double A2) {
  // The Hessian of V is diagonal at every equilibrium because each one lies on an axis.
  const double q = A1 * A1 + 4.0 * A2 * A2;
  const double v11 = 2.0 * (m.alpha + q) + 4.0 * A1 * A1;
  const double v22 = 8.0 * (m.beta + q) + 64.0 * A2 * A2;
  Equilibrium e{};
  e.location = {A1, 0.0, A2, 0.0};
  e.eigenvalues = {eigen_pair_from_curvature(v11), eigen_pair_from_curvature(v22)};
  int real_pairs = 0;
  bool zero = false;
  for (const auto& p : e.eigenvalues) {
    real_pairs += p.kind == EigenKind::RealPair;
    zero = zero || p.kind == EigenKind::Zero;
  }
  if (zero) {
    e.classification = Classification::Degenerate;
  } else if (real_pairs == 0) {
    e.classification = Classification::Minimum;
  } else if (real_pairs == 1) {
    e.classification = Classification::Index1Saddle;
  } else {
    e.classification = Classification::Index2Saddle;
  }
  e.energy = potential(m, A1, A2);
  return e;
}

}  // namespace

std::vector<Equilibrium> equilibria(const ModelParams& m) {
  if (!(m.alpha < 0.0)) {
    throw UnsupportedRegime("equilibrium catalogue requires alpha < 0");
  }
  std::vector<Equilibrium> out;
  out.push_back(make_equilibrium(m, 0.0, 0.0));
  const double a = std::sqrt(-m.alpha);
  out.push_back(make_equilibrium(m, a, 0.0));
  out.push_back(make_equilibrium(m, -a, 0.0));
  if (m.beta < 0.0) {
    const double b = std::sqrt(-m.beta) / 2.0;
    out.push_back(make_equilibrium(m, 0.0, b));
    out.push_back(make_equilibrium(m, 0.0, -b));
  }
  return out;
}

}  // namespace nanobeam
