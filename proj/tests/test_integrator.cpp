#include "doctest.h"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <vector>

#include "nanobeam/beam_model.hpp"
#include "nanobeam/error.hpp"
#include "nanobeam/integrator.hpp"

using namespace nanobeam;

namespace {
ModelParams case_params(CaseId id) {
  return ModelParams::from(
      derive_constants(PhysicalBeam::silicon_reference(), strain_case(id).epsilon));
}

ScaledState on_ds(const ModelParams& m, double E, double A2, double p2) {
  const double kin = E - 0.5 * p2 * p2 - potential(m, 0.0, A2);
  return {0.0, std::sqrt(2.0 * kin), A2, p2};
}
}  // namespace

TEST_CASE("equilibria are fixed points of the step") {
  const ModelParams m = case_params(CaseId::II);
  for (const Equilibrium& e : equilibria(m)) {
    ScaledState s = e.location;
    for (int k = 0; k < 1000; ++k) s = step(m, s, 0.01);
    CHECK(std::abs(s.A1 - e.location.A1) < 1e-15);
    CHECK(std::abs(s.A2 - e.location.A2) < 1e-15);
    CHECK(std::abs(s.p1) < 1e-15);
    CHECK(std::abs(s.p2) < 1e-15);
  }
}

TEST_CASE("harmonic period about the minimum") {
  const ModelParams m = case_params(CaseId::I);
  const double a0 = std::sqrt(-m.alpha);
  const double dt = 0.01;
  ScaledState s{a0 * (1 + 1e-6), 0, 0, 0};
  // upward zero crossings of A1 - a0, linearly interpolated
  std::vector<double> ups;
  double t = 0;
  double prev = s.A1 - a0;
  while (ups.size() < 6) {
    s = step(m, s, dt);
    t += dt;
    const double cur = s.A1 - a0;
    if (prev < 0 && cur >= 0) ups.push_back(t - dt * cur / (cur - prev));
    prev = cur;
  }
  const double period = (ups.back() - ups.front()) / 5.0;
  const double exact = 2 * M_PI / (2 * std::sqrt(-m.alpha));
  const double w = 2 * std::sqrt(-m.alpha);
  CHECK(std::abs(period - exact) / exact < (w * dt) * (w * dt));
  CHECK(std::abs(period - exact) / exact < 1e-5);
}

TEST_CASE("time reversal round trip") {
  const ModelParams m = case_params(CaseId::III);
  const ScaledState s0 = on_ds(m, 1e-8, 0.003, -0.00005);
  ScaledState s = s0;
  for (int k = 0; k < 20000; ++k) s = step(m, s, 0.01);
  s.p1 = -s.p1;
  s.p2 = -s.p2;
  for (int k = 0; k < 20000; ++k) s = step(m, s, 0.01);
  CHECK(std::abs(s.A1 - s0.A1) < 1e-10);
  CHECK(std::abs(s.A2 - s0.A2) < 1e-10);
  CHECK(std::abs(-s.p1 - s0.p1) < 1e-10);
  CHECK(std::abs(-s.p2 - s0.p2) < 1e-10);
}

TEST_CASE("long-time energy drift") {
  const ModelParams m = case_params(CaseId::II);
  const double E = 1e-7;
  ScaledState s = on_ds(m, E, 0.01, 0.0);
  double worst_short = 0, worst = 0;
  for (int k = 1; k <= 10'000'000; ++k) {
    s = step(m, s, 0.01);
    if (k % 100 == 0) {
      const double d = relative_drift(m, E, total_energy(m, s));
      worst = std::max(worst, d);
      if (k <= 100'000) worst_short = d > worst_short ? d : worst_short;
    }
  }
  CHECK(worst < 1e-6);
  CHECK(worst < 5 * worst_short);
}

TEST_CASE("gap time on the first invariant plane") {
  const ModelParams m = case_params(CaseId::I);
  for (const double E : {1e-9, 1e-8, 1e-7}) {
    const double u = -m.alpha + std::sqrt(m.alpha * m.alpha + 2 * E);
    // A1 = sqrt(u) sin(theta) removes the turning-point singularity
    boost::math::quadrature::tanh_sinh<double> ts;
    const double half = ts.integrate(
        [&](double th) {
          const double sn = std::sin(th);
          return 1.0 / std::sqrt(u * sn * sn + u + 2 * m.alpha);
        },
        0.0, M_PI / 2);
    const double oracle = 2 * half;
    IntegratorConfig cfg;
    const CrossingResult r = first_crossing(m, {0, std::sqrt(2 * E), 0, 0}, cfg);
    REQUIRE_FALSE(r.censored());
    CAPTURE(E);
    CHECK(std::abs(r.event->time - oracle) / oracle < 1e-4);
    CHECK(r.event->direction == -1);
    CHECK(std::abs(r.event->state.A1) < cfg.crossing_tol);
    CHECK(r.event->state.A2 == 0.0);
  }
}

TEST_CASE("inversion partner has the same gap time") {
  const ModelParams m = case_params(CaseId::II);
  const double E = 1e-8;
  IntegratorConfig cfg;
  const CrossingResult a = first_crossing(m, on_ds(m, E, 0.004, 0.0001), cfg);
  const CrossingResult b = first_crossing(m, on_ds(m, E, -0.004, -0.0001), cfg);
  REQUIRE_FALSE(a.censored());
  REQUIRE_FALSE(b.censored());
  CHECK(std::abs(a.event->time - b.event->time) / a.event->time < 1e-6);
}

TEST_CASE("censoring and accuracy failures") {
  const ModelParams m = case_params(CaseId::I);
  IntegratorConfig cfg;
  cfg.t_max = 10.0;
  const CrossingResult r = first_crossing(m, on_ds(m, 1e-7, 0.0, 0.0), cfg);
  CHECK(r.censored());
  CHECK(r.t_end == doctest::Approx(10.0));

  IntegratorConfig coarse;
  coarse.dt = 20.0;
  coarse.energy_tol = 1e-9;
  CHECK_THROWS_AS(first_crossing(m, on_ds(m, 1e-7, 0.003, 0.0), coarse), IntegrationError);

  IntegratorConfig bad;
  bad.dt = -1;
  CHECK_THROWS_AS(bad.validate(), InvalidParameter);
  bad = {};
  bad.t_max = 0.001;
  CHECK_THROWS_AS(bad.validate(), InvalidParameter);
}

TEST_CASE("observation on a time grid") {
  const ModelParams m = case_params(CaseId::III);
  const double E = 1e-8;
  const ScaledState s0 = on_ds(m, E, 0.002, 0.0);
  IntegratorConfig cfg;
  const std::vector<double> zero{0.0};
  const auto at0 = propagate_observe(m, s0, zero, cfg);
  REQUIRE(at0.size() == 1);
  CHECK(at0[0] == s0);

  std::vector<double> grid;
  for (int k = 0; k <= 200; ++k) grid.push_back(25.0 * k);
  const auto states = propagate_observe(m, s0, grid, cfg);
  REQUIRE(states.size() == grid.size());
  for (const auto& s : states) {
    CHECK(relative_drift(m, E, total_energy(m, s)) < cfg.energy_tol);
  }
  // grid points that coincide with steps reproduce plain stepping
  ScaledState s = s0;
  for (int k = 0; k < 2500; ++k) s = step(m, s, cfg.dt);
  CHECK(std::abs(states[1].A1 - s.A1) < 1e-12);

  const std::vector<double> descending{5.0, 1.0};
  CHECK_THROWS_AS(propagate_observe(m, s0, descending, cfg), InvalidParameter);
  const std::vector<double> too_late{2e6};
  CHECK_THROWS_AS(propagate_observe(m, s0, too_late, cfg), InvalidParameter);
}

TEST_CASE("second invariant plane is preserved") {
  const ModelParams m = case_params(CaseId::II);
  const ScaledState s0{0.0, 0.0, 0.012, 0.0003};
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(100.0 * k);
  for (const auto& s : propagate_observe(m, s0, grid, IntegratorConfig{})) {
    CHECK(std::abs(s.A1) < 1e-12);
    CHECK(std::abs(s.p1) < 1e-12);
  }
}

TEST_CASE("successive crossings alternate in direction") {
  const ModelParams m = case_params(CaseId::III);
  const auto ev = crossings(m, on_ds(m, 1e-8, 0.003, 0.0), 30, IntegratorConfig{});
  REQUIRE(ev.size() == 30);
  for (std::size_t k = 1; k < ev.size(); ++k) {
    CHECK(ev[k].direction == -ev[k - 1].direction);
    CHECK(ev[k].time > ev[k - 1].time);
  }
  const auto tr = trace(m, on_ds(m, 1e-8, 0.003, 0.0), 4, 5.0, IntegratorConfig{});
  REQUIRE(tr.size() > 2);
  CHECK(tr.front().t == 0.0);
  int zeros = 0;
  for (const auto& p : tr) zeros += std::abs(p.state.A1) < 1e-10 && p.t > 0;
  CHECK(zeros == 4);
}
