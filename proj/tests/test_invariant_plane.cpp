#include "doctest.h"

#include <cmath>
#include <vector>

#include "nanobeam/beam_model.hpp"
#include "nanobeam/error.hpp"
#include "nanobeam/integrator.hpp"
#include "nanobeam/invariant_plane.hpp"

using namespace nanobeam;

namespace {
ModelParams case_params(CaseId id) {
  return ModelParams::from(
      derive_constants(PhysicalBeam::silicon_reference(), strain_case(id).epsilon));
}
}  // namespace

TEST_CASE("plane energies") {
  const ModelParams m = case_params(CaseId::II);
  CHECK(plane_energy(m, Plane::Pi2, 0, 0) == 0.0);
  CHECK(plane_energy(m, Plane::Pi2, std::sqrt(-m.beta) / 2, 0) ==
        doctest::Approx(-m.beta * m.beta / 2).epsilon(1e-13));
  CHECK(plane_energy(m, Plane::Pi1, std::sqrt(-m.alpha), 0) ==
        doctest::Approx(-m.alpha * m.alpha / 2).epsilon(1e-13));
  CHECK(plane_energy(m, Plane::Pi1, 0.01, 0.002) == doctest::Approx(total_energy(m, {0.01, 0.002, 0, 0})));
  CHECK(plane2_minimum_energy(m) == doctest::Approx(-m.beta * m.beta / 2));
  CHECK(plane2_minimum_energy(case_params(CaseId::I)) == 0.0);
}

TEST_CASE("normal hyperbolicity bound") {
  const double expected[] = {2.710e-7, 2.770e-7, 4.848e-7};
  int k = 0;
  for (const CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
    const NhimBound b = nhim_energy_bound(case_params(id));
    CHECK(b.E_max == doctest::Approx(expected[k++]).epsilon(5e-4));
    CHECK(b.holds_at(1e-7));
    CHECK_FALSE(b.holds_at(b.E_max));
  }
  CHECK(nhim_energy_bound(ModelParams{-1.0, 0.0}).E_max == doctest::Approx(0.5));
  CHECK_THROWS_AS(nhim_energy_bound(ModelParams{0.1, 0.1}), UnsupportedRegime);
}

TEST_CASE("turning points") {
  const ModelParams m = case_params(CaseId::II);
  CHECK(max_turning_point(m, 0.0) == doctest::Approx(-m.beta / 2).epsilon(1e-14));
  const ModelParams flat{-1e-3, 0.0};
  CHECK(max_turning_point(flat, 1e-8) == doctest::Approx(std::sqrt(2e-8) / 4).epsilon(1e-14));
  for (const CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
    const ModelParams p = case_params(id);
    const NhimBound b = nhim_energy_bound(p);
    CHECK(max_turning_point(p, b.E_max) == doctest::Approx(-p.alpha / 4).epsilon(1e-12));
    CHECK(dichotomy_margin(p, b.E_max) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(dichotomy_margin(case_params(CaseId::I), 1e-7) < 1.0);
  CHECK_THROWS_AS(max_turning_point(case_params(CaseId::I), -1e-9), DomainError);
  CHECK_THROWS_AS(max_turning_point(m, -3e-7), DomainError);
}

TEST_CASE("turning point is increasing and equivalent to the bound") {
  for (const CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
    const ModelParams m = case_params(id);
    const double E_max = nhim_energy_bound(m).E_max;
    const double lo = plane2_minimum_energy(m);
    double prev = -1;
    for (int k = 0; k <= 200; ++k) {
      const double E = lo + (2 * E_max - lo) * k / 200.0 + 1e-15;
      const double tp = max_turning_point(m, E);
      CHECK(tp > prev);
      prev = tp;
      if (std::abs(E - E_max) > 1e-12 * E_max) {
        CHECK((dichotomy_margin(m, E) < 1.0) == (E < E_max));
      }
    }
  }
}

TEST_CASE("observed turning point on the second plane") {
  for (const CaseId id : {CaseId::I, CaseId::II, CaseId::III}) {
    const ModelParams m = case_params(id);
    for (const double E : {1e-9, 1e-8, 1e-7}) {
      // start at p2 = 0 at the far turning point would be circular; start at A2 = 0
      // with all energy kinetic and track the largest A2^2 bracketed by p2 changing sign
      ScaledState s{0, 0, 0, std::sqrt(2 * E)};
      IntegratorConfig cfg;
      double sup = 0;
      ScaledState prev = s;
      for (int k = 0; k < 200000; ++k) {
        s = step(m, s, cfg.dt);
        if (prev.p2 > 0 && s.p2 <= 0) {
          // refine the extremum by quadratic fit through the momentum zero
          double lo = 0, hi = cfg.dt;
          ScaledState a = prev;
          for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            const ScaledState c = step(m, prev, mid);
            if (c.p2 > 0) lo = mid, a = c; else hi = mid;
          }
          sup = std::max(sup, a.A2 * a.A2);
        }
        prev = s;
      }
      const double tp = max_turning_point(m, E);
      CAPTURE(E);
      CHECK(std::abs(sup - tp) / tp < 1e-6);
    }
  }
}

TEST_CASE("second plane topology") {
  const ModelParams m = case_params(CaseId::II);
  CHECK(plane2_topology(m, -3e-7) == LevelSetTopology::Empty);
  CHECK(plane2_topology(m, -2e-7) == LevelSetTopology::DoubleLobe);
  CHECK(plane2_topology(m, 0.0) == LevelSetTopology::Critical);
  CHECK(plane2_topology(m, 1e-8) == LevelSetTopology::SingleLoop);
  CHECK(plane2_topology(case_params(CaseId::I), 1e-8) == LevelSetTopology::SingleLoop);
  CHECK(plane2_topology(case_params(CaseId::I), -1e-8) == LevelSetTopology::Empty);
  const QuarticRoots r = plane2_turning_roots(m, -2e-7);
  CHECK(r.u_minus > 0);
  CHECK(r.u_plus > r.u_minus);
  CHECK(plane_energy(m, Plane::Pi2, std::sqrt(r.u_minus), 0) == doctest::Approx(-2e-7).epsilon(1e-10));
  CHECK(plane_energy(m, Plane::Pi2, std::sqrt(r.u_plus), 0) == doctest::Approx(-2e-7).epsilon(1e-10));
}
