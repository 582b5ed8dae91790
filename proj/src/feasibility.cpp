#include "esomit/feasibility.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "esomit/error.hpp"

namespace esomit {

namespace {

struct PublishedRange {
  const char* source;
  std::optional<std::array<double, 2>> gamma;  // MHz
  std::optional<std::array<double, 2>> J;
};

// Experimentally reported ranges (MHz). A single reported J is a zero-width range.
const std::array<PublishedRange, 4> kPublished{{
    {"EIT-like WGM experiment", std::array{5.57, 11.98}, std::array{0.22, 7.11}},
    {"loss-induced revival experiment", std::nullopt, std::array{0.0, 200.0}},
    {"ES sensing experiment", std::array{0.1, 3.0}, std::array{0.87, 0.87}},
    {"chiral WGM experiment", std::array{0.87, 5.84}, std::nullopt},
}};

constexpr double kGammaLo = 0.1;
constexpr double kGammaHi = 12.0;
constexpr double kJLo = 0.0;
constexpr double kJHi = 200.0;

}  // namespace

BackscatterCoupling coupling_from_nanoparticle(const NanoparticleSpec& spec, double omega0) {
  if (!(spec.V_m > 0.0)) {
    throw Error(ErrorKind::ZeroModeVolume, "V_m", "mode volume must be > 0");
  }
  if (spec.f_at_r < 0.0 || spec.f_at_r > 1.0) {
    throw Error(ErrorKind::InvalidValue, "f_at_r", "field profile value must lie in [0, 1]");
  }
  const double two_j = -spec.alpha_pol * spec.f_at_r * spec.f_at_r * omega0 / spec.V_m;
  return {0.5 * std::abs(two_j), two_j < 0.0 ? -1.0 : 1.0};
}

double round_trip_time(double n, double R) { return 2.0 * n * std::numbers::pi * R / kSpeedOfLight; }

double fiber_coupling_rate(const FiberCouplingSpec& spec) {
  if (spec.eta < 0.0) throw Error(ErrorKind::InvalidValue, "eta", "eta must be >= 0");
  if (spec.n < 1.0) throw Error(ErrorKind::InvalidValue, "n", "refractive index must be >= 1");
  if (!(spec.R > 0.0)) throw Error(ErrorKind::InvalidValue, "R", "radius must be > 0");
  return spec.eta / (2.0 * round_trip_time(spec.n, spec.R));
}

RangeReport check_ranges(const SystemParams& p, FrequencyConvention convention) {
  const double unit = parse_quantity("1 MHz", Dimension::Rate, convention);
  const double g1 = p.gamma1 / unit;
  const double g2 = p.gamma2 / unit;
  const double J = p.J / unit;

  RangeReport report;
  auto inside = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
  for (const auto& src : kPublished) {
    if (src.gamma) {
      for (auto [name, v] : {std::pair{"gamma1", g1}, std::pair{"gamma2", g2}}) {
        report.rows.push_back({src.source, name, (*src.gamma)[0], (*src.gamma)[1], v,
                               inside(v, (*src.gamma)[0], (*src.gamma)[1])});
      }
    }
    if (src.J) {
      report.rows.push_back({src.source, "J", (*src.J)[0], (*src.J)[1], J, inside(J, (*src.J)[0], (*src.J)[1])});
    }
  }

  for (auto [name, v] : {std::pair{"gamma1", g1}, std::pair{"gamma2", g2}}) {
    if (v < kGammaLo) {
      report.gamma_in_range = false;
      report.warnings.push_back(std::string(name) + " = " + format_double(v) +
                                " MHz below reported range (ES sensing experiment: 0.1-3 MHz)");
    } else if (v > kGammaHi) {
      report.gamma_in_range = false;
      report.warnings.push_back(std::string(name) + " = " + format_double(v) +
                                " MHz above reported range (EIT-like WGM experiment: 5.57-11.98 MHz)");
    }
  }
  if (J < kJLo || J > kJHi) {
    report.J_in_range = false;
    report.warnings.push_back("J = " + format_double(J) +
                              " MHz outside reported range (loss-induced revival experiment: 0-200 MHz)");
  }
  return report;
}

}  // namespace esomit
