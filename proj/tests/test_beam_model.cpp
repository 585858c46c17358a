#include "doctest.h"

#include <cmath>

#include "nanobeam/beam_model.hpp"
#include "nanobeam/error.hpp"

using namespace nanobeam;

namespace {
const PhysicalBeam kBeam = PhysicalBeam::silicon_reference();
}

TEST_CASE("derived constants for the tabulated strains") {
  struct Row {
    CaseId id;
    double eps_bar, alpha, beta;
  };
  const Row rows[] = {{CaseId::I, -0.00032942, -0.00032898, 0.00065928},
                      {CaseId::II, -0.00033029, -0.00164491, -0.00065404},
                      {CaseId::III, -0.00032992, -0.00108977, -0.00010000}};
  for (const Row& r : rows) {
    const DerivedConstants c = derive_constants(kBeam, strain_case(r.id).epsilon);
    CAPTURE(static_cast<int>(r.id));
    CHECK(std::abs(c.eps_bar - r.eps_bar) <= 1e-8);
    CHECK(std::abs(c.alpha - r.alpha) <= 1e-8);
    CHECK(std::abs(c.beta - r.beta) <= 1e-8);
    CHECK(c.alpha == doctest::Approx(c.epsilon - c.eps_bar).epsilon(1e-15));
    CHECK(c.beta == doctest::Approx(c.epsilon - 4.0 * c.eps_bar).epsilon(1e-15));
  }
}

TEST_CASE("linear modulus and units") {
  const DerivedConstants c = derive_constants(kBeam, strain_case(CaseId::I).epsilon);
  CHECK(c.linear_modulus == doctest::Approx(2.6e-7).epsilon(1e-12));
  CHECK(c.gyration == doctest::Approx(1e-9 / std::sqrt(12.0)).epsilon(1e-12));
  CHECK(c.mass_per_length == doctest::Approx(2330.0 * 2e-18).epsilon(1e-12));
  CHECK(c.energy_unit == doctest::Approx(2.6e-7 * 5e-8).epsilon(1e-12));
  CHECK(c.time_unit == doctest::Approx(3.01e-12).epsilon(2e-3));
}

TEST_CASE("critical strain") {
  const double ec = critical_strain(kBeam);
  CHECK(ec == doctest::Approx(-0.000329).epsilon(3e-3));
  const double kappa2 = 1e-18 / 12.0;
  const double L = 5e-8 * (1.0 + ec);
  CHECK(std::abs(ec + kappa2 * M_PI * M_PI / (L * L)) <= 1e-12 * std::abs(ec));
  const double zeroth = -kappa2 * M_PI * M_PI / (5e-8 * 5e-8);
  CHECK(zeroth == doctest::Approx(-3.28987e-4).epsilon(1e-5));
  CHECK(std::abs(zeroth - ec) < 1e-3 * std::abs(ec));
  CHECK(strain_case(CaseId::I).epsilon == doctest::Approx(2.0 * ec).epsilon(1e-3));
}

TEST_CASE("mode stability") {
  const double e1 = strain_case(CaseId::I).epsilon;
  CHECK_FALSE(mode_frequency(kBeam, e1, 1).stable);
  CHECK(mode_frequency(kBeam, e1, 2).stable);
  for (const CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
    const double e = strain_case(id).epsilon;
    CHECK(mode_frequency(kBeam, e, 3).stable);
    CHECK_FALSE(mode_frequency(kBeam, e, 1).stable);
  }
  CHECK_FALSE(mode_frequency(kBeam, strain_case(CaseId::II).epsilon, 2).stable);
  CHECK_THROWS_AS(mode_frequency(kBeam, e1, 0), InvalidParameter);

  const DerivedConstants c = derive_constants(kBeam, -1e-5);
  const double omega0 =
      M_PI * M_PI * c.gyration / (c.compressed_length * c.compressed_length) *
      std::sqrt(c.linear_modulus / c.mass_per_length);
  const ModeFrequency f = mode_frequency(kBeam, -1e-5, 2);
  CHECK(f.stable);
  CHECK(f.omega == doctest::Approx(omega0 * 2.0 * std::sqrt(4.0 - c.epsilon / c.eps_bar)));
}

TEST_CASE("energy scales") {
  const double barrier[] = {50.98, 1274.4, 559.4};
  const double quantum[] = {0.092, 0.206, 0.168};
  int k = 0;
  for (const CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
    const EnergyScales s = energy_scales(kBeam, strain_case(id).epsilon);
    CHECK(s.barrier_K == doctest::Approx(barrier[k]).epsilon(5e-3));
    CHECK(s.quantum_K == doctest::Approx(quantum[k]).epsilon(2e-2));
    ++k;
  }
  CHECK_THROWS_AS(energy_scales(kBeam, -1e-5), UnsupportedRegime);
}

TEST_CASE("parameter validation") {
  PhysicalBeam b = kBeam;
  b.depth = 0.0;
  CHECK_THROWS_AS(validate(b), InvalidParameter);
  CHECK_THROWS_AS(derive_constants(b, -1e-4), InvalidParameter);
  b = kBeam;
  b.width = 0.5e-9;
  CHECK_THROWS_AS(validate(b), InvalidParameter);
  b = kBeam;
  b.mass_density = -1.0;
  CHECK_THROWS_AS(validate(b), InvalidParameter);
  CHECK_THROWS_AS(derive_constants(kBeam, -1.5), InvalidParameter);
}

TEST_CASE("case labels") {
  CHECK(parse_case("II") == CaseId::II);
  CHECK(strain_case(CaseId::III).epsilon == -0.00141969);
  CHECK_THROWS_AS(parse_case("IV"), InvalidParameter);
}
