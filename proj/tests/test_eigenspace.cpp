#include "doctest.h"

#include "esomit/eigenspace.hpp"
#include "esomit/presets.hpp"
#include "oracles.hpp"

using namespace esomit;

namespace {

constexpr double MHz = 1e6;

SystemParams point(double J, double t0, double g1, double g2, double phi3_pi) {
  SystemParams p = preset("baseline").params;
  p.J = J;
  p.t0 = t0;
  p.gamma1 = g1;
  p.gamma2 = g2;
  p.phi3 = Phase::pi_units(phi3_pi);
  return validate(p);
}

// Eigenvalues at phi3 = 1.5pi in reduced form: E^2 = J (J - s).
std::pair<double, double> reduced_split(double J, double s) {
  const double q = J * (J - s);
  return q >= 0 ? std::pair{std::sqrt(q), 0.0} : std::pair{0.0, std::sqrt(-q)};
}

}  // namespace

TEST_SUITE("eigenspace") {

TEST_CASE("alpha and beta at worked points") {
  AlphaBeta ab = alpha_beta(1 * MHz, 1, 1 * MHz, 1 * MHz, Phase::pi_units(1.5));
  CHECK(ab.alpha == 0.0);
  CHECK(ab.beta == 0.0);

  ab = alpha_beta(1 * MHz, 1, 1 * MHz, 1 * MHz, Phase::pi_units(0.5));
  CHECK(ab.alpha == doctest::Approx(1e12).epsilon(1e-14));
  CHECK(ab.beta == doctest::Approx(1e12).epsilon(1e-14));

  ab = alpha_beta(0, 0.8, 1 * MHz, 2 * MHz, Phase::pi_units(1.2));
  CHECK(ab.alpha == 0.0);
  CHECK(ab.beta == 0.0);
}

TEST_CASE("eigenvalue branches at worked points") {
  EigenSplit e = eigen_split(0, 0.7, 1.3 * MHz, 0.4 * MHz, Phase::pi_units(0.3));
  CHECK(e.omega_plus == 0.0);
  CHECK(e.kappa_plus == 0.0);

  e = eigen_split(1 * MHz, 1, 1 * MHz, 1 * MHz, Phase::pi_units(1.5));
  CHECK(e.omega_plus == 0.0);
  CHECK(e.omega_minus == 0.0);
  CHECK(e.kappa_plus == 0.0);
  CHECK(e.kappa_minus == 0.0);

  e = eigen_split(0.5 * MHz, 1, 1 * MHz, 1 * MHz, Phase::pi_units(1.5));
  CHECK(e.omega_plus == 0.0);
  CHECK(e.kappa_plus == doctest::Approx(0.5 * MHz).epsilon(1e-14));
  CHECK(e.kappa_minus == doctest::Approx(-0.5 * MHz).epsilon(1e-14));
}

TEST_CASE("es coupling values") {
  CHECK(es_coupling(1, 1 * MHz, 1 * MHz) == doctest::Approx(1 * MHz).epsilon(1e-15));
  CHECK(es_coupling(0.9, 1 * MHz, 1 * MHz) == doctest::Approx(0.9 * MHz).epsilon(1e-15));
  const double j5 = es_coupling(1, 0.61 * MHz, 1.11 * MHz);
  CHECK(j5 == doctest::Approx(0.8229 * MHz).epsilon(1e-4));
  CHECK(std::round(j5 / MHz * 100) / 100 == 0.82);
}

TEST_CASE("classification at table points") {
  CHECK(classify_point(point(1 * MHz, 1, 1 * MHz, 1 * MHz, 1.5)).kind == PhaseKind::EsKind2);
  CHECK(classify_point(point(1.5 * MHz, 1, 0.5 * MHz, 0.5 * MHz, 1.5)).kind == PhaseKind::OmegaSplit);
  CHECK(classify_point(point(0.5 * MHz, 1, 1 * MHz, 1 * MHz, 1.5)).kind == PhaseKind::KappaSplit);
  CHECK(classify_point(point(0, 1, 1 * MHz, 1 * MHz, 1.5)).kind == PhaseKind::EsKind1);
  CHECK(classify_point(point(1 * MHz, 1, 1 * MHz, 1 * MHz, 1.3)).kind == PhaseKind::GenericNP);
  CHECK(to_string(PhaseKind::EsKind2) == "ES-Kind2");
}

TEST_CASE("distance to the surfaces") {
  EsDistance d = distance_to_es(point(1 * MHz, 1, 1 * MHz, 1 * MHz, 1.5));
  CHECK(d.second_kind == 0.0);
  CHECK(d.first_kind == 1 * MHz);
  d = distance_to_es(point(1.5 * MHz, 1, 0.5 * MHz, 0.5 * MHz, 1.5));
  CHECK(d.second_kind == doctest::Approx(1 * MHz).epsilon(1e-15));
  CHECK(d.first_kind == 1.5 * MHz);
  d = distance_to_es(point(0, 0.8, 1 * MHz, 1.5 * MHz, 1.5));
  CHECK(d.second_kind == doctest::Approx(0.8 * std::sqrt(1.5) * MHz).epsilon(1e-15));
  CHECK(d.first_kind == 0.0);
}

TEST_CASE("antisymmetry and product identity on random draws") {
  oracle::ParamGen gen(101);
  for (int i = 0; i < 10000; ++i) {
    const double J = gen.uniform(0, 3 * MHz), t0 = gen.uniform(0, 1);
    const double g1 = gen.uniform(0.1 * MHz, 3 * MHz), g2 = gen.uniform(0.1 * MHz, 3 * MHz);
    const double ph = gen.uniform(0, 2);
    const EigenSplit e = eigen_split(J, t0, g1, g2, Phase::pi_units(ph));
    REQUIRE(e.omega_plus + e.omega_minus == 0.0);
    REQUIRE(e.kappa_plus + e.kappa_minus == 0.0);
    REQUIRE(e.alpha >= std::abs(e.beta));
    const double c = std::cos(std::numbers::pi * ph);
    const double expected = J * J * t0 * t0 * g1 * g2 * c * c / 4;
    const double got = std::pow(e.omega_plus * e.kappa_plus, 2);
    const double diff = std::abs(got - expected);
    // The identity is relative to alpha^2, the size of the terms it cancels.
    REQUIRE(diff <= 1e-10 * std::max(expected, 1e-6 * e.alpha * e.alpha));
  }
}

TEST_CASE("product identity off the special phase, relative") {
  oracle::ParamGen gen(202);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const double J = gen.uniform(0.05 * MHz, 3 * MHz), t0 = gen.uniform(0.1, 1);
    const double g1 = gen.uniform(0.1 * MHz, 3 * MHz), g2 = gen.uniform(0.1 * MHz, 3 * MHz);
    double ph = gen.uniform(0, 2);
    if (std::abs(std::cos(std::numbers::pi * ph)) < 1e-2) continue;
    const EigenSplit e = eigen_split(J, t0, g1, g2, Phase::pi_units(ph));
    const double c = std::cos(std::numbers::pi * ph);
    const double expected = J * J * t0 * t0 * g1 * g2 * c * c / 4;
    REQUIRE(std::abs(std::pow(e.omega_plus * e.kappa_plus, 2) - expected) <= 1e-10 * expected);
    ++checked;
  }
  CHECK(checked > 9000);
}

TEST_CASE("coalescence on the second-kind surface") {
  oracle::ParamGen gen(303);
  for (int i = 0; i < 100; ++i) {
    const double t0 = gen.uniform(0.05, 1), g1 = gen.uniform(0.1 * MHz, 3 * MHz), g2 = gen.uniform(0.1 * MHz, 3 * MHz);
    const double J = es_coupling(t0, g1, g2);
    const EigenSplit e = eigen_split(J, t0, g1, g2, kEsPhase);
    CHECK(std::abs(e.omega_splitting()) < 1e-9 * J);
    CHECK(std::abs(e.kappa_splitting()) < 1e-9 * J);
  }
}

TEST_CASE("phase transition through J*") {
  oracle::ParamGen gen(404);
  for (int i = 0; i < 500; ++i) {
    const double t0 = gen.uniform(0.1, 1), g1 = gen.uniform(0.1 * MHz, 3 * MHz), g2 = gen.uniform(0.1 * MHz, 3 * MHz);
    const double js = es_coupling(t0, g1, g2);
    const double J = js * gen.uniform(0.01, 2.0);
    if (std::abs(J - js) < 1e-3 * js) continue;
    const EigenSplit e = eigen_split(J, t0, g1, g2, kEsPhase);
    if (J < js) {
      CHECK(e.omega_plus == 0.0);
      CHECK(e.kappa_plus > 0.0);
    } else {
      CHECK(e.kappa_plus == 0.0);
      CHECK(e.omega_plus > 0.0);
    }
  }
}

TEST_CASE("general form equals the reduced form at 1.5pi") {
  oracle::ParamGen gen(505);
  for (int i = 0; i < 2000; ++i) {
    const double t0 = gen.uniform(0, 1), g1 = gen.uniform(0.1 * MHz, 3 * MHz), g2 = gen.uniform(0.1 * MHz, 3 * MHz);
    const double J = gen.uniform(0, 3 * MHz);
    const EigenSplit e = eigen_split(J, t0, g1, g2, kEsPhase);
    const auto [w, k] = reduced_split(J, t0 * std::sqrt(g1 * g2));
    const double scale = std::max({w, k, 1e-300});
    CHECK(std::abs(e.omega_plus - w) <= 1e-12 * scale);
    CHECK(std::abs(e.kappa_plus - k) <= 1e-12 * scale);
  }
}

TEST_CASE("branches are the eigenvalues of the one-way coupled pair") {
  // H = [[0, J - i s e^{i phi}], [J, 0]] has eigenvalues +-(omega - i kappa).
  oracle::ParamGen gen(606);
  for (int i = 0; i < 1000; ++i) {
    const double t0 = gen.uniform(0, 1), g1 = gen.uniform(0.1 * MHz, 3 * MHz), g2 = gen.uniform(0.1 * MHz, 3 * MHz);
    const double J = gen.uniform(0, 3 * MHz), ph = gen.uniform(0, 2);
    const double s = t0 * std::sqrt(g1 * g2);
    const std::complex<double> e2 = J * (J - std::complex<double>(0, 1) * s * std::polar(1.0, std::numbers::pi * ph));
    const std::complex<double> root = std::sqrt(e2);
    const EigenSplit e = eigen_split(J, t0, g1, g2, Phase::pi_units(ph));
    const double scale = std::abs(root) + 1e-300;
    CHECK(std::abs(std::abs(root.real()) - e.omega_plus) <= 1e-9 * scale);
    CHECK(std::abs(std::abs(root.imag()) - e.kappa_plus) <= 1e-9 * scale);
  }
}

}  // TEST_SUITE
