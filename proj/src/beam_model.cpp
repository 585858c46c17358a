#include "nanobeam/beam_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nanobeam/error.hpp"

namespace nanobeam {

namespace {

constexpr double kPi = std::numbers::pi;

double gyration_squared(const PhysicalBeam& beam) { return beam.depth * beam.depth / 12.0; }

}  // namespace

void validate(const PhysicalBeam& beam) {
  if (!(beam.elastic_modulus > 0.0) || !(beam.rest_length > 0.0) || !(beam.width > 0.0) ||
      !(beam.depth > 0.0) || !(beam.mass_density > 0.0)) {
    throw InvalidParameter("beam parameters must all be strictly positive");
  }
  if (!(beam.width > beam.depth)) {
    throw InvalidParameter("beam width must exceed its depth");
  }
}

DerivedConstants derive_constants(const PhysicalBeam& beam, double epsilon) {
  validate(beam);
  if (!(1.0 + epsilon > 0.0)) {
    throw InvalidParameter("strain must satisfy 1 + epsilon > 0");
  }
  DerivedConstants c{};
  c.epsilon = epsilon;
  c.linear_modulus = beam.elastic_modulus * beam.width * beam.depth;
  const double k2 = gyration_squared(beam);
  c.gyration = std::sqrt(k2);
  c.mass_per_length = beam.mass_density * beam.width * beam.depth;
  c.compressed_length = beam.rest_length * (1.0 + epsilon);
  const double L = c.compressed_length;
  c.eps_bar = -k2 * kPi * kPi / (L * L);
  c.alpha = epsilon - c.eps_bar;
  c.beta = epsilon - 4.0 * c.eps_bar;
  c.energy_unit = c.linear_modulus * beam.rest_length;
  c.time_unit = (L / kPi) * std::sqrt(2.0 * c.mass_per_length / c.linear_modulus);
  return c;
}

double critical_strain(const PhysicalBeam& beam, double tol, int max_iter) {
  validate(beam);
  const double k2pi2 = gyration_squared(beam) * kPi * kPi;
  const double L0 = beam.rest_length;
  auto g = [&](double eps) {
    const double L = L0 * (1.0 + eps);
    return -k2pi2 / (L * L);
  };
  double eps = -k2pi2 / (L0 * L0);
  for (int it = 0; it < max_iter; ++it) {
    const double next = g(eps);
    if (std::abs(next - eps) <= tol * std::abs(next)) {
      eps = next;
      // Residual is measured against the implicit equation itself.
      if (std::abs(g(eps) - eps) <= tol * std::abs(eps)) return eps;
    }
    eps = next;
  }
  throw ConvergenceError("critical strain iteration did not converge in " +
                         std::to_string(max_iter) + " steps");
}

ModeFrequency mode_frequency(const PhysicalBeam& beam, double epsilon, int n) {
  if (n < 1) throw InvalidParameter("mode index must be >= 1");
  const DerivedConstants c = derive_constants(beam, epsilon);
  const double L = c.compressed_length;
  const double omega0 =
      kPi * kPi * (c.gyration / (L * L)) * std::sqrt(c.linear_modulus / c.mass_per_length);
  const double disc = static_cast<double>(n) * n - epsilon / c.eps_bar;
  return {omega0 * n * std::sqrt(std::abs(disc)), disc > 0.0};
}

EnergyScales energy_scales(const PhysicalBeam& beam, double epsilon) {
  const DerivedConstants c = derive_constants(beam, epsilon);
  if (!(c.alpha < 0.0)) {
    throw UnsupportedRegime("no double-well barrier: alpha must be negative");
  }
  EnergyScales s{};
  s.energy_unit = c.energy_unit;
  s.time_unit = c.time_unit;
  s.barrier_K = c.energy_unit * c.alpha * c.alpha / (2.0 * kBoltzmann);
  // Small oscillations along the reaction coordinate at the minimum: scaled frequency 2 sqrt(-alpha).
  const double omega = 2.0 * std::sqrt(-c.alpha) / c.time_unit;
  s.quantum_K = kHbar * omega / kBoltzmann;
  return s;
}

StrainCase strain_case(CaseId id) {
  switch (id) {
    case CaseId::I:
      return {id, "I", -0.00065840};
    case CaseId::II:
      return {id, "II", -0.00197520};
    case CaseId::III:
      return {id, "III", -0.00141969};
  }
  throw InvalidParameter("unknown strain case");
}

CaseId parse_case(std::string_view label) {
  if (label == "I") return CaseId::I;
  if (label == "II") return CaseId::II;
  if (label == "III") return CaseId::III;
  throw InvalidParameter("unknown case '" + std::string(label) + "' (expected I, II or III)");
}

}  // namespace nanobeam
