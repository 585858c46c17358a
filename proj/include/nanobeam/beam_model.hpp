#pragma once

// Physical beam parameters and the scaling onto the two-mode model.

#include <string_view>

namespace nanobeam {

inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kHbar = 1.054571817e-34;         // J s

/// Hinged beam with a rectangular cross-section, SI units.
struct PhysicalBeam {
  double elastic_modulus;  // Q, J/m^3
  double rest_length;      // L0, m
  double width;            // w, m
  double depth;            // d, m
  double mass_density;     // kg/m^3

  /// Silicon nanobeam used for the three reference strain cases.
  static PhysicalBeam silicon_reference() {
    return {1.3e11, 5e-8, 2e-9, 1e-9, 2330.0};
  }
};

/// Throws InvalidParameter unless all fields are positive and width > depth.
void validate(const PhysicalBeam& beam);

struct DerivedConstants {
  double epsilon;           // applied strain
  double linear_modulus;    // F = Q w d, N
  double gyration;          // kappa, with kappa^2 = d^2 / 12, m
  double mass_per_length;   // mu, kg/m
  double compressed_length; // L = L0 (1 + epsilon), m
  double eps_bar;           // -kappa^2 pi^2 / L^2
  double alpha;             // epsilon - eps_bar
  double beta;              // epsilon - 4 eps_bar
  double energy_unit;       // F L0, J
  double time_unit;         // (L / pi) sqrt(2 mu / F), s
};

DerivedConstants derive_constants(const PhysicalBeam& beam, double epsilon);

/// Solves eps_c = -kappa^2 pi^2 / (L0 (1 + eps_c))^2 by fixed-point iteration.
double critical_strain(const PhysicalBeam& beam, double tol = 1e-12, int max_iter = 100);

struct ModeFrequency {
  double omega;  // rad/s; for unstable modes the magnitude of the imaginary frequency
  bool stable;
};

ModeFrequency mode_frequency(const PhysicalBeam& beam, double epsilon, int n);

struct EnergyScales {
  double barrier_K;    // Delta E / k_B
  double quantum_K;    // hbar omega_well / k_B
  double energy_unit;  // J
  double time_unit;    // s
};

EnergyScales energy_scales(const PhysicalBeam& beam, double epsilon);

enum class CaseId { I, II, III };

struct StrainCase {
  CaseId id;
  const char* label;
  double epsilon;
};

StrainCase strain_case(CaseId id);
/// Parses "I", "II" or "III"; throws InvalidParameter otherwise.
CaseId parse_case(std::string_view label);

}  // namespace nanobeam
