#include "doctest.h"

#include <numbers>

#include "esomit/error.hpp"
#include "esomit/feasibility.hpp"
#include "esomit/io.hpp"
#include "esomit/presets.hpp"

using namespace esomit;

namespace {

constexpr double MHz = 1e6;
constexpr double c_light = 299792458.0;

}  // namespace

TEST_SUITE("feasibility") {

TEST_CASE("nanoparticle coupling") {
  const double omega0 = 193e12;
  NanoparticleSpec np{1e-21, 0.0, 1e-16};
  CHECK(coupling_from_nanoparticle(np, omega0).J == 0.0);

  np.f_at_r = 0.5;
  const BackscatterCoupling a = coupling_from_nanoparticle(np, omega0);
  CHECK(a.J == doctest::Approx(0.5 * 1e-21 * 0.25 * omega0 / 1e-16).epsilon(1e-15));
  CHECK(a.sign == -1.0);
  np.V_m *= 2;
  CHECK(coupling_from_nanoparticle(np, omega0).J == doctest::Approx(a.J / 2).epsilon(1e-15));

  np.V_m = 0.0;
  try {
    coupling_from_nanoparticle(np, omega0);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroModeVolume);
  }
}

TEST_CASE("nanoparticle coupling feeds the model") {
  const double omega0 = 193e12;
  // Choose alpha so that J = 0.87 MHz.
  const double V = 1e-16, f = 0.8;
  const double alpha = 2 * 0.87 * MHz * V / (f * f * omega0);
  const BackscatterCoupling b = coupling_from_nanoparticle({alpha, f, V}, omega0);
  CHECK(b.J == doctest::Approx(0.87 * MHz).epsilon(1e-14));
  RawParams raw = io::to_raw(preset("es2-ep2").params);
  raw["J"] = format_double(b.J) + " rad/s";
  CHECK(build_system(raw).J == b.J);
}

TEST_CASE("fiber coupling rate") {
  const double R = 34.5e-6, n = 1.44;
  const double tau = round_trip_time(n, R);
  CHECK(tau == doctest::Approx(2 * n * std::numbers::pi * R / c_light).epsilon(1e-15));
  const double eta = 2 * tau * 1 * MHz;
  CHECK(std::abs(fiber_coupling_rate({eta, n, R}) - 1 * MHz) <= 1e-12 * MHz);
  CHECK(fiber_coupling_rate({2 * eta, n, R}) == doctest::Approx(2 * MHz).epsilon(1e-14));
  CHECK(fiber_coupling_rate({eta, n, 2 * R}) == doctest::Approx(0.5 * MHz).epsilon(1e-14));
  CHECK_THROWS_AS(fiber_coupling_rate({eta, n, 0.0}), Error);
  CHECK_THROWS_AS(fiber_coupling_rate({-1.0, n, R}), Error);
}

TEST_CASE("range checks") {
  const SystemParams ep2 = preset("es2-ep2").params;
  RangeReport r = check_ranges(ep2);
  CHECK(r.all_in_range());
  CHECK(r.warnings.empty());
  CHECK_FALSE(r.rows.empty());

  SystemParams big = ep2;
  big.J = 500 * MHz;
  r = check_ranges(big);
  CHECK_FALSE(r.J_in_range);
  CHECK(r.warnings.size() == 1);
  CHECK(big.J == 500 * MHz);

  SystemParams low = ep2;
  low.gamma1 = 0.05 * MHz;
  r = check_ranges(low);
  CHECK_FALSE(r.gamma_in_range);
  CHECK(r.J_in_range);
  CHECK(r.warnings.front().find("gamma1") != std::string::npos);
  CHECK(low.gamma1 == 0.05 * MHz);

  const RangeReport cyc = check_ranges(preset("es2-ep2", FrequencyConvention::Cyclic).params,
                                       FrequencyConvention::Cyclic);
  CHECK(cyc.all_in_range());
  for (const auto& row : cyc.rows) {
    if (row.quantity == "J") CHECK(row.value == doctest::Approx(1.0).epsilon(1e-14));
  }
}

}  // TEST_SUITE
