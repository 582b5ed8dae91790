#include "doctest.h"

#include "esomit/error.hpp"
#include "esomit/presets.hpp"
#include "esomit/steady_state.hpp"
#include "oracles.hpp"

using namespace esomit;

TEST_SUITE("steady-state") {

TEST_CASE("zero drive gives zero fields") {
  const Preset b = preset("baseline");
  Drive d = b.drive;
  d.Pc = 1e-300;
  const auto [a1, a2] = intracavity_steady(b.params, d, 0.0);
  CHECK(std::abs(a1) < 1e-100);
  CHECK(std::abs(a2) < 1e-100);
}

TEST_CASE("decoupled fields reduce to single-port loading") {
  Preset b = preset("baseline");
  SystemParams p = b.params;
  p.loop_coupling = false;
  p.phi1 = Phase::pi_units(0);
  const Drive d = make_drive(p, 1e-3, 0.0);
  const double Ec = oracle::pump_amplitude(d);
  const double gamma = p.gamma_half();
  const auto [a1, a2] = intracavity_steady(p, d, 0.0);
  CHECK(oracle::rel(a1, Ec * std::sqrt(p.gamma1) / gamma) <= 1e-14);
  CHECK(oracle::rel(a2, Ec * std::sqrt(p.gamma2) / gamma) <= 1e-14);
}

TEST_CASE("fields match an independent 2x2 solve") {
  for (const auto& name : preset_names()) {
    const Preset pr = preset(name);
    for (double u : {0.0, 1e6, 1.4e8}) {
      const auto [a1, a2] = intracavity_steady(pr.params, pr.drive, u);
      const auto ref = oracle::mean_fields(pr.params, pr.drive, u);
      CHECK(oracle::rel(a1, ref[0]) <= 1e-10);
      CHECK(oracle::rel(a2, ref[1]) <= 1e-10);
    }
  }
}

TEST_CASE("g = 0 leaves the cavity unshifted") {
  Preset b = preset("es2-ep2");
  b.params.g = 0.0;
  b.params.g_override = true;
  const SteadyState ss = solve_steady(b.params, b.drive);
  CHECK(ss.u == 0.0);
  CHECK(ss.x_bar == 0.0);
  const auto [a1, a2] = intracavity_steady(b.params, b.drive, 0.0);
  CHECK(ss.a_cw == a1);
  CHECK(ss.a_ccw == a2);
}

TEST_CASE("self-consistency on every preset") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const Preset pr = preset(name);
    const SteadyState ss = solve_steady(pr.params, pr.drive);
    const double gamma = pr.params.gamma_half();
    CHECK(std::abs(ss.residual) <= 1e-12 * std::max(ss.u, gamma));
    CHECK(std::abs(oracle::fixed_point(pr.params, pr.drive, ss.u)) <= 1e-11 * std::max(ss.u, gamma));
    const auto ref = oracle::mean_fields(pr.params, pr.drive, ss.u);
    CHECK(oracle::rel(ss.a_cw, ref[0]) <= 1e-10);
    CHECK(oracle::rel(ss.a_ccw, ref[1]) <= 1e-10);
    const double xbar = pr.params.g / (pr.params.m * pr.params.omega_m * pr.params.omega_m) * oracle::hbar *
                        (std::norm(ss.a_cw) + std::norm(ss.a_ccw));
    CHECK(std::abs(ss.x_bar - xbar) <= 1e-10 * xbar);
    CHECK(ss.x_bar >= 0.0);
    CHECK(ss.u == ss.all_roots.front());
    for (double r : ss.all_roots) CHECK(r >= ss.u);
  }
}

TEST_CASE("dense scan finds exactly the solver's roots on the baseline") {
  const Preset b = preset("baseline");
  const SteadyState ss = solve_steady(b.params, b.drive);
  const double u_max = steady_search_limit(b.params, b.drive);
  const auto dense = oracle::dense_roots(b.params, b.drive, u_max, 1'000'000);
  REQUIRE(dense.size() == ss.all_roots.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    CHECK(std::abs(dense[i] - ss.all_roots[i]) <= 1e-8 * dense[i]);
  }
  // Past u_max the shift outruns any reachable intensity.
  CHECK(oracle::fixed_point(b.params, b.drive, u_max) > 0.0);
}

TEST_CASE("operating shift grows with pump power") {
  Preset b = preset("baseline");
  double last = -1.0;
  for (int k = 1; k <= 10; ++k) {
    Drive d = b.drive;
    d.Pc = 0.2e-3 * k;
    const SteadyState ss = solve_steady(b.params, d);
    CHECK(ss.u >= last);
    last = ss.u;
  }
}

TEST_CASE("probe power does not enter the steady state") {
  const Preset b = preset("es2-ep3");
  Drive d = b.drive;
  const SteadyState s1 = solve_steady(b.params, d);
  d.Pp *= 100;
  const SteadyState s2 = solve_steady(b.params, d);
  CHECK(std::abs(s1.u - s2.u) <= 1e-10 * s1.u);
  CHECK(oracle::rel(s1.a_cw, s2.a_cw) <= 1e-10);
}

}  // TEST_SUITE
