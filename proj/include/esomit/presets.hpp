#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esomit/eigenspace.hpp"
#include "esomit/linear_response.hpp"

namespace esomit {

/// Ties dependent parameters to the swept one.
enum class SweepConstraint {
  None,
  Gamma2OnLine,         // gamma2 = line_gamma2(gamma1)
  JOnSurface,           // J = t0 sqrt(gamma1 gamma2)
  SymmetricOnSurface,   // gamma2 = gamma1, J = t0 gamma1
};

struct SweepSpec {
  std::string axis;  // SystemParams field; phase axes take pi units
  Grid grid;
  SweepConstraint constraint = SweepConstraint::None;
};

struct Preset {
  std::string name;
  SystemParams params;
  Drive drive;
  Grid spectrum;  // probe detuning delta_p, rad/s
  std::optional<SweepSpec> sweep;
  std::vector<Phase> phases;  // phase-sweep presets only
  std::string provenance;
  std::vector<std::string> assumptions;
  FrequencyConvention convention = FrequencyConvention::Angular;
};

const std::vector<std::string>& preset_names();

/// Throws Error{UnknownPreset} listing the catalog.
Preset preset(const std::string& name, FrequencyConvention convention = FrequencyConvention::Angular);

/// First-kind reference line gamma2 = -0.86 gamma1 + 1.86, coefficients in MHz.
struct LineValue {
  double gamma2 = 0.0;
  bool in_figure_range = true;  // gamma1 within [0.6, 1.5] MHz
};
LineValue line_gamma2(double gamma1, FrequencyConvention convention = FrequencyConvention::Angular);

/// Sets one named SystemParams field (phase fields take pi units). Throws
/// Error{InvalidValue} on an unknown axis.
void set_axis(SystemParams& p, const std::string& axis, double value);

/// Applies a constraint after the axis value has been set, then revalidates.
SystemParams apply_constraint(SystemParams p, SweepConstraint c, FrequencyConvention convention);

struct SweepPoint {
  double axis_value = 0.0;
  SystemParams params;
  SpectrumTable table;
};

/// One spectrum per axis value, computed concurrently, returned in grid order.
std::vector<SweepPoint> sweep_1d(const Preset& base, const std::string& axis,
                                 const std::vector<double>& values,
                                 SweepConstraint constraint = SweepConstraint::None);

struct PhasePoint {
  Phase phi3;
  PhaseClass cls;
  bool on_es = false;
  SpectrumTable table;
};

std::vector<PhasePoint> sweep_phase(const Preset& base, const std::vector<Phase>& phases);

enum class Polarity { Peak, Valley };
std::string_view to_string(Polarity p);

struct WindowMetrics {
  double center = 0.0;
  double height = 0.0;
  double width = 0.0;
  double baseline = 0.0;
  Polarity polarity = Polarity::Peak;
};

/// Largest excursion of T from the median of the outer 20% of
/// [lo, hi] (10% at each end); width is the full width at half prominence.
/// Throws Error{NoExtremum} when T is monotone over the range.
WindowMetrics window_metrics(const SpectrumTable& table, double lo, double hi);

}  // namespace esomit
