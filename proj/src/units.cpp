#include "esomit/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

#include "esomit/error.hpp"

namespace esomit {

namespace {

struct UnitEntry {
  std::string_view suffix;
  Dimension dim;
  double scale;
  bool frequency;  // subject to the cyclic 2 pi factor
};

constexpr std::array kUnits{
    UnitEntry{"Hz", Dimension::Rate, 1.0, true},
    UnitEntry{"kHz", Dimension::Rate, 1e3, true},
    UnitEntry{"MHz", Dimension::Rate, 1e6, true},
    UnitEntry{"GHz", Dimension::Rate, 1e9, true},
    UnitEntry{"THz", Dimension::Rate, 1e12, true},
    UnitEntry{"rad/s", Dimension::Rate, 1.0, false},
    UnitEntry{"m", Dimension::Length, 1.0, false},
    UnitEntry{"mm", Dimension::Length, 1e-3, false},
    UnitEntry{"um", Dimension::Length, 1e-6, false},
    UnitEntry{"\xC2\xB5m", Dimension::Length, 1e-6, false},  // µm
    UnitEntry{"nm", Dimension::Length, 1e-9, false},
    UnitEntry{"kg", Dimension::Mass, 1.0, false},
    UnitEntry{"g", Dimension::Mass, 1e-3, false},
    UnitEntry{"mg", Dimension::Mass, 1e-6, false},
    UnitEntry{"ug", Dimension::Mass, 1e-9, false},
    UnitEntry{"\xC2\xB5g", Dimension::Mass, 1e-9, false},
    UnitEntry{"ng", Dimension::Mass, 1e-12, false},
    UnitEntry{"pg", Dimension::Mass, 1e-15, false},
    UnitEntry{"W", Dimension::Power, 1.0, false},
    UnitEntry{"mW", Dimension::Power, 1e-3, false},
    UnitEntry{"uW", Dimension::Power, 1e-6, false},
    UnitEntry{"\xC2\xB5W", Dimension::Power, 1e-6, false},
    UnitEntry{"nW", Dimension::Power, 1e-9, false},
    UnitEntry{"Hz/m", Dimension::Coupling, 1.0, true},
    UnitEntry{"rad/(s*m)", Dimension::Coupling, 1.0, false},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits "147 MHz" / "147MHz" into number and suffix.
std::pair<double, std::string_view> split_number(std::string_view text, std::string_view field) {
  text = trim(text);
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidValue, std::string(field),
                "cannot parse number from '" + std::string(text) + "'" +
                    (field.empty() ? "" : " for " + std::string(field)));
  }
  return {value, trim(std::string_view(ptr, static_cast<std::size_t>(last - ptr)))};
}

double cyclic_factor(FrequencyConvention c) {
  return c == FrequencyConvention::Cyclic ? 2.0 * std::numbers::pi : 1.0;
}

}  // namespace

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(std::numbers::pi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

std::string_view to_string(FrequencyConvention c) {
  return c == FrequencyConvention::Cyclic ? "cyclic" : "angular";
}

FrequencyConvention parse_convention(std::string_view text) {
  text = trim(text);
  if (text == "angular") return FrequencyConvention::Angular;
  if (text == "cyclic") return FrequencyConvention::Cyclic;
  throw Error(ErrorKind::InvalidValue, "frequency-convention",
              "expected 'angular' or 'cyclic', got '" + std::string(text) + "'");
}

double parse_quantity(std::string_view text, Dimension dim, FrequencyConvention convention,
                      std::string_view field) {
  auto [value, suffix] = split_number(text, field);
  if (suffix.empty()) return value;
  for (const auto& u : kUnits) {
    if (u.suffix == suffix && u.dim == dim) {
      return value * u.scale * (u.frequency ? cyclic_factor(convention) : 1.0);
    }
  }
  throw Error(ErrorKind::UnknownUnit, std::string(field),
              "unit '" + std::string(suffix) + "' not valid" +
                  (field.empty() ? "" : " for " + std::string(field)));
}

Phase parse_phase(std::string_view text, std::string_view field) {
  auto [value, suffix] = split_number(text, field);
  if (suffix == "pi") return Phase::pi_units(value);
  if (suffix.empty() || suffix == "rad") return Phase::radians(value);
  throw Error(ErrorKind::UnknownUnit, std::string(field),
              "phase unit '" + std::string(suffix) + "' not valid, use 'pi' or 'rad'");
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v == 0.0 ? 0.0 : v);
  return buf.data();
}

std::string format_quantity(double si_value, std::string_view unit, FrequencyConvention convention) {
  for (const auto& u : kUnits) {
    if (u.suffix == unit) {
      double v = si_value / (u.scale * (u.frequency ? cyclic_factor(convention) : 1.0));
      return format_double(v) + " " + std::string(unit);
    }
  }
  throw Error(ErrorKind::UnknownUnit, std::string(unit), "cannot format unknown unit");
}

std::string format_phase(Phase p) { return format_double(p.in_pi_units()) + "pi"; }

}  // namespace esomit
