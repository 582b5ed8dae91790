#pragma once

#include <complex>
#include <numbers>
#include <string>
#include <string_view>

namespace esomit {

using cdouble = std::complex<double>;

inline constexpr double kHbar = 1.054571817e-34;        // J s
inline constexpr double kSpeedOfLight = 299792458.0;    // m / s

/// sin(pi*x) and cos(pi*x), exact at every multiple of 1/2.
double sin_pi(double x);
double cos_pi(double x);

/// A phase angle held in units of pi, so that the special values the model
/// keys on (0.5pi, 1.5pi, ...) are represented exactly.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase pi_units(double multiple) { return Phase(multiple); }
  static constexpr Phase radians(double rad) { return Phase(rad / std::numbers::pi); }

  constexpr double in_pi_units() const { return multiple_; }
  constexpr double in_radians() const { return multiple_ * std::numbers::pi; }

  double sin() const { return sin_pi(multiple_); }
  double cos() const { return cos_pi(multiple_); }
  /// e^{i phase}
  cdouble unit() const { return {cos(), sin()}; }

  friend constexpr bool operator==(Phase, Phase) = default;

 private:
  constexpr explicit Phase(double multiple) : multiple_(multiple) {}
  double multiple_ = 0.0;
};

/// How quoted "Hz" values are turned into rates. Angular reads "147 MHz" as
/// 147e6 rad/s; cyclic multiplies by 2 pi.
enum class FrequencyConvention { Angular, Cyclic };

std::string_view to_string(FrequencyConvention c);
FrequencyConvention parse_convention(std::string_view text);

enum class Dimension { Rate, Length, Mass, Power, Dimensionless, Coupling };

/// Parses "147 MHz", "34.5 um", "50 ng", "1 mW", "0.9". Bare numbers are SI.
/// Throws Error{UnknownUnit} for a suffix that does not belong to `dim` and
/// Error{InvalidValue} for unparsable or non-finite numbers.
double parse_quantity(std::string_view text, Dimension dim,
                      FrequencyConvention convention = FrequencyConvention::Angular,
                      std::string_view field = {});

/// Parses "1.5pi", "1.5 pi", "4.712 rad" or a bare radian value.
Phase parse_phase(std::string_view text, std::string_view field = {});

/// Inverse of parse_quantity for a named unit ("MHz", "um", ...); 17
/// significant digits so parsing the result returns the same double.
std::string format_quantity(double si_value, std::string_view unit,
                            FrequencyConvention convention = FrequencyConvention::Angular);
std::string format_phase(Phase p);

/// Shortest round-trip text for a double ("%.17g").
std::string format_double(double v);

}  // namespace esomit
