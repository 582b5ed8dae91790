#include "esomit/presets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "esomit/error.hpp"
#include "esomit/parallel.hpp"

namespace esomit {

namespace {

constexpr double kLineSlope = -0.86;
constexpr double kLineIntercept = 1.86;  // MHz
constexpr double kLineMin = 0.6;         // MHz
constexpr double kLineMax = 1.5;

double mhz(FrequencyConvention c) {
  return parse_quantity("1 MHz", Dimension::Rate, c);
}

// Values shared by every configuration: R, omega0, gamma0, m, omega_m, Pc, gamma_m.
RawParams device_params() {
  return {
      {"R", "34.5 um"},       {"omega0", "193 THz"},  {"gamma0", "1 MHz"},
      {"m", "50 ng"},         {"omega_m", "147 MHz"}, {"gamma_m", "0.24 MHz"},
      {"phi3", "1.5pi"},      {"t0", "1"},            {"J", "0 MHz"},
      {"gamma1", "1 MHz"},    {"gamma2", "1 MHz"},
  };
}

struct Entry {
  std::string provenance;
  RawParams overrides;
  std::vector<std::string> assumptions;
  std::function<void(Preset&)> extra;
};

const std::string kPumpAssumption = "pump detuning Delta_a = omega_m (not printed in the source)";
const std::string kEs1Assumption = "first-kind points use t0 = 1, phi3 = 1.5pi (not printed in the source)";

const std::map<std::string, Entry>& catalog() {
  static const std::map<std::string, Entry> entries = [] {
    std::map<std::string, Entry> m;
    auto es1 = [](const char* g1, const char* g2) {
      return RawParams{{"gamma1", g1}, {"gamma2", g2}, {"J", "0 MHz"}};
    };
    auto es2 = [](const char* J, const char* g1, const char* g2, const char* t0) {
      return RawParams{{"J", J}, {"gamma1", g1}, {"gamma2", g2}, {"t0", t0}, {"phi3", "1.5pi"}};
    };
    m["baseline"] = {"Sec. III device parameters with Fig. 2(c) EP2 couplings", es1("1 MHz", "1 MHz"),
                     {kEs1Assumption}, {}};
    m["es1-ep1"] = {"Fig. 2(c) EP1", es1("0.7 MHz", "1.26 MHz"), {kEs1Assumption}, {}};
    m["es1-ep2"] = {"Fig. 2(c) EP2", es1("1 MHz", "1 MHz"), {kEs1Assumption}, {}};
    m["es1-ep3"] = {"Fig. 2(c) EP3", es1("1.38 MHz", "0.68 MHz"), {kEs1Assumption}, {}};
    m["es1-np"] = {"Fig. 3(b,c) NP with J = 0.3 MHz",
                   {{"gamma1", "1 MHz"}, {"gamma2", "1 MHz"}, {"J", "0.3 MHz"}},
                   {kEs1Assumption, "NP built on the EP2 couplings"},
                   {}};
    m["es2-np1"] = {"Table 1 NP1", es2("1.5 MHz", "0.5 MHz", "0.5 MHz", "1"), {}, {}};
    m["es2-ep1"] = {"Table 1 EP1", es2("0.5 MHz", "0.5 MHz", "0.5 MHz", "1"), {}, {}};
    m["es2-ep2"] = {"Table 1 EP2", es2("1 MHz", "1 MHz", "1 MHz", "1"), {}, {}};
    m["es2-ep3"] = {"Table 1 EP3", es2("1.5 MHz", "1.5 MHz", "1.5 MHz", "1"), {}, {}};
    m["es2-ep4"] = {"Table 1 EP4", es2("0.9 MHz", "1 MHz", "1 MHz", "0.9"), {}, {}};
    m["es2-ep5"] = {"Table 1 EP5", es2("0.82 MHz", "0.61 MHz", "1.11 MHz", "1"), {}, {}};
    m["fig2a-black"] = {"Fig. 2(a) black dashed line (first-kind ES, J = 0)", es1("1 MHz", "1 MHz"),
                        {kEs1Assumption}, {}};
    m["fig2a-red"] = {"Fig. 2(a) red line (second-kind ES, EP2 of Table 1)",
                      es2("1 MHz", "1 MHz", "1 MHz", "1"), {}, {}};
    m["fig2d-line"] = {"Fig. 2(d) spectra along gamma2 = -0.86 gamma1 + 1.86",
                       es1("0.7 MHz", "1.26 MHz"),
                       {kEs1Assumption},
                       [](Preset& p) {
                         const double u = mhz(p.convention);
                         p.sweep = SweepSpec{"gamma1", Grid{0.7 * u, 1.38 * u, 50},
                                             SweepConstraint::Gamma2OnLine};
                       }};
    m["fig4-surfaces"] = {"Fig. 4(a) t0 = 1 second-kind surface, symmetric couplings",
                          es2("1 MHz", "1 MHz", "1 MHz", "1"),
                          {"cross-section gamma1 = gamma2 traced through EP1..EP3"},
                          [](Preset& p) {
                            const double u = mhz(p.convention);
                            p.sweep = SweepSpec{"gamma1", Grid{0.5 * u, 1.5 * u, 11},
                                                SweepConstraint::SymmetricOnSurface};
                          }};
    m["fig5-phase-sweep"] = {"Fig. 5 phase sweep around EP2 of Table 1",
                             es2("1 MHz", "1 MHz", "1 MHz", "1"),
                             {"NP phases {1.3, 1.4, 1.6, 1.7} pi are not printed in the source"},
                             [](Preset& p) {
                               for (double k : {1.3, 1.4, 1.5, 1.6, 1.7}) {
                                 p.phases.push_back(Phase::pi_units(k));
                               }
                             }};
    return m;
  }();
  return entries;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, entry] : catalog()) v.push_back(name);
    return v;
  }();
  return names;
}

Preset preset(const std::string& name, FrequencyConvention convention) {
  const auto it = catalog().find(name);
  if (it == catalog().end()) {
    std::string list;
    for (const auto& n : preset_names()) list += (list.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::UnknownPreset, name, "unknown preset '" + name + "'; catalog: " + list);
  }
  const Entry& e = it->second;
  RawParams raw = device_params();
  for (const auto& [k, v] : e.overrides) raw[k] = v;

  Preset p;
  p.name = name;
  p.convention = convention;
  p.params = build_system(raw, convention);
  p.drive = build_drive(p.params, {{"Pc", "1 mW"}}, convention);
  const double u = mhz(convention);
  p.spectrum = Grid{-5.0 * u, 5.0 * u, 2001};
  p.provenance = e.provenance;
  p.assumptions = e.assumptions;
  p.assumptions.push_back(kPumpAssumption);
  if (e.extra) e.extra(p);
  return p;
}

LineValue line_gamma2(double gamma1, FrequencyConvention convention) {
  const double u = mhz(convention);
  const double g1 = gamma1 / u;
  return {(kLineSlope * g1 + kLineIntercept) * u, g1 >= kLineMin && g1 <= kLineMax};
}

void set_axis(SystemParams& p, const std::string& axis, double value) {
  static const std::map<std::string, double SystemParams::*> rates = {
      {"omega0", &SystemParams::omega0}, {"gamma0", &SystemParams::gamma0},
      {"gamma1", &SystemParams::gamma1}, {"gamma2", &SystemParams::gamma2},
      {"J", &SystemParams::J},           {"t0", &SystemParams::t0},
      {"R", &SystemParams::R},           {"m", &SystemParams::m},
      {"omega_m", &SystemParams::omega_m}, {"gamma_m", &SystemParams::gamma_m},
  };
  if (auto it = rates.find(axis); it != rates.end()) {
    p.*(it->second) = value;
    return;
  }
  if (axis == "phi1") {
    p.phi1 = Phase::pi_units(value);
  } else if (axis == "phi2") {
    p.phi2 = Phase::pi_units(value);
  } else if (axis == "phi3") {
    p.phi3 = Phase::pi_units(value);
  } else if (axis == "g") {
    p.g = value;
    p.g_override = true;
  } else {
    throw Error(ErrorKind::InvalidValue, axis, "unknown sweep axis '" + axis + "'");
  }
}

SystemParams apply_constraint(SystemParams p, SweepConstraint c, FrequencyConvention convention) {
  switch (c) {
    case SweepConstraint::None:
      break;
    case SweepConstraint::Gamma2OnLine:
      p.gamma2 = line_gamma2(p.gamma1, convention).gamma2;
      break;
    case SweepConstraint::JOnSurface:
      p.J = es_coupling(p.t0, p.gamma1, p.gamma2);
      break;
    case SweepConstraint::SymmetricOnSurface:
      p.gamma2 = p.gamma1;
      p.J = es_coupling(p.t0, p.gamma1, p.gamma2);
      break;
  }
  return validate(p);
}

std::vector<SweepPoint> sweep_1d(const Preset& base, const std::string& axis,
                                 const std::vector<double>& values, SweepConstraint constraint) {
  if (values.empty()) throw Error(ErrorKind::InvalidGrid, "grid", "sweep grid is empty");
  const std::vector<double> detunings = base.spectrum.values();
  std::vector<SweepPoint> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    SystemParams p = base.params;
    set_axis(p, axis, values[i]);
    out[i].axis_value = values[i];
    out[i].params = apply_constraint(p, constraint, base.convention);
  }
  parallel_for(values.size(), [&](std::size_t i) {
    // The pump keeps its detuning from the (possibly swept) resonance.
    const Drive d = make_drive(out[i].params, base.drive.Pc, pump_detuning(base.params, base.drive), 0.0,
                               base.drive.Pp);
    out[i].table = transmission_spectrum(out[i].params, d, detunings, base.name, base.convention);
  });
  return out;
}

std::vector<PhasePoint> sweep_phase(const Preset& base, const std::vector<Phase>& phases) {
  if (phases.empty()) throw Error(ErrorKind::InvalidGrid, "phases", "phase list is empty");
  for (Phase ph : phases) {
    if (ph.in_pi_units() < 0.0 || ph.in_pi_units() >= 2.0) {
      throw Error(ErrorKind::InvalidValue, "phi3", "phase sweep values must lie in [0, 2pi)");
    }
  }
  std::vector<double> values;
  for (Phase ph : phases) values.push_back(ph.in_pi_units());
  std::vector<SweepPoint> points = sweep_1d(base, "phi3", values);
  std::vector<PhasePoint> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i].phi3 = phases[i];
    out[i].cls = classify_point(points[i].params);
    out[i].on_es = out[i].cls.kind == PhaseKind::EsKind2;
    out[i].table = std::move(points[i].table);
  }
  return out;
}

std::string_view to_string(Polarity p) { return p == Polarity::Peak ? "peak" : "valley"; }

WindowMetrics window_metrics(const SpectrumTable& table, double lo, double hi) {
  const auto& rows = table.rows;
  if (rows.empty() || !(hi > lo) || lo < rows.front().delta_p || hi > rows.back().delta_p) {
    throw Error(ErrorKind::InvalidGrid, "range", "search range must lie within the table span");
  }
  std::vector<const SpectrumRow*> in;
  for (const auto& r : rows) {
    if (r.delta_p >= lo && r.delta_p <= hi) in.push_back(&r);
  }
  const std::size_t n = in.size();
  if (n < 3) throw Error(ErrorKind::NoExtremum, "range", "fewer than 3 samples in range");

  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (in[i]->T < in[i - 1]->T) increasing = false;
    if (in[i]->T > in[i - 1]->T) decreasing = false;
  }
  if (increasing || decreasing) {
    throw Error(ErrorKind::NoExtremum, "range", "transmission is monotone over the search range");
  }

  const std::size_t edge = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.1 * n)));
  std::vector<double> outer;
  for (std::size_t i = 0; i < edge; ++i) {
    outer.push_back(in[i]->T);
    outer.push_back(in[n - 1 - i]->T);
  }
  std::sort(outer.begin(), outer.end());
  const std::size_t m = outer.size();
  const double baseline = m % 2 ? outer[m / 2] : 0.5 * (outer[m / 2 - 1] + outer[m / 2]);

  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(in[i]->T - baseline) > std::abs(in[k]->T - baseline)) k = i;
  }

  WindowMetrics w;
  w.center = in[k]->delta_p;
  w.height = in[k]->T;
  w.baseline = baseline;
  w.polarity = w.height > baseline ? Polarity::Peak : Polarity::Valley;

  const double half = baseline + 0.5 * (w.height - baseline);
  const double sign = w.height > baseline ? 1.0 : -1.0;
  auto above = [&](std::size_t i) { return sign * (in[i]->T - half) > 0.0; };
  auto crossing = [&](std::size_t inside, std::size_t outside) {
    const double x0 = in[inside]->delta_p;
    const double x1 = in[outside]->delta_p;
    const double y0 = in[inside]->T - half;
    const double y1 = in[outside]->T - half;
    return y0 == y1 ? x1 : x0 + (x1 - x0) * y0 / (y0 - y1);
  };
  std::size_t left = k;
  while (left > 0 && above(left - 1)) --left;
  const double x_left = left > 0 ? crossing(left, left - 1) : in[0]->delta_p;
  std::size_t right = k;
  while (right + 1 < n && above(right + 1)) ++right;
  const double x_right = right + 1 < n ? crossing(right, right + 1) : in[n - 1]->delta_p;
  w.width = x_right - x_left;
  return w;
}

}  // namespace esomit
