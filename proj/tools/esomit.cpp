// esomit: eigenvalue, spectrum, delay and sweep tables for the looped
// CW/CCW optomechanical resonator.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esomit/appendix.hpp"
#include "esomit/eigenspace.hpp"
#include "esomit/error.hpp"
#include "esomit/feasibility.hpp"
#include "esomit/io.hpp"
#include "esomit/linear_response.hpp"
#include "esomit/parallel.hpp"
#include "esomit/presets.hpp"

using namespace esomit;
using io::json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kIo = 3, kNumerical = 4 };

struct Options {
  std::string preset;
  std::string config;
  std::vector<std::string> sets;
  std::string grid;
  std::string format = "csv";
  std::string out;
  std::string convention = "angular";
  bool timestamp = false;
  std::string axis;
  std::string constraint;
  std::vector<std::string> at;
  std::vector<std::string> phases;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SingularDenominator:
    case ErrorKind::NoConvergence:
    case ErrorKind::SingularSystem:
    case ErrorKind::ZeroB:
    case ErrorKind::ZeroProbe:
    case ErrorKind::NonConvergentDerivative:
    case ErrorKind::NoExtremum:
      return kNumerical;
    default:
      return kUsage;
  }
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Parameters and drive resolved from exactly one of --preset, --config or
// inline --set assignments, with --set applied last.
struct Resolved {
  std::string name;
  FrequencyConvention convention = FrequencyConvention::Angular;
  SystemParams params;
  Drive drive;
  std::optional<Preset> preset;
};

Resolved resolve(const Options& o) {
  Resolved r;
  r.convention = parse_convention(o.convention);
  if (!o.preset.empty() && !o.config.empty()) throw UsageError("--preset and --config are mutually exclusive");
  RawParams raw;
  if (!o.preset.empty()) {
    r.preset = preset(o.preset, r.convention);
    r.name = o.preset;
    raw = io::to_raw(r.preset->params, r.preset->drive);
  } else if (!o.config.empty()) {
    raw = io::read_config_file(o.config);
    r.name = "config";
  } else if (!o.sets.empty()) {
    r.name = "inline";
  } else {
    throw UsageError("one of --preset, --config or --set is required");
  }
  for (const auto& s : o.sets) {
    auto [k, v] = io::split_assignment(s);
    raw[k] = v;
  }
  r.params = build_system(raw, r.convention);
  if (!raw.contains("Pc")) raw["Pc"] = "1 mW";
  r.drive = build_drive(r.params, raw, r.convention);
  if (r.preset && !o.sets.empty()) {
    r.preset->params = r.params;
    r.preset->drive = r.drive;
  }
  return r;
}

struct GridText {
  std::string lo, hi;
  std::size_t count = 0;
};

GridText split_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos) throw UsageError("--grid expects min:max:count, got '" + text + "'");
  GridText g{text.substr(0, a), text.substr(a + 1, b - a - 1)};
  const std::string n = text.substr(b + 1);
  try {
    std::size_t used = 0;
    const long long c = std::stoll(n, &used);
    if (used != n.size() || c < 0) throw std::invalid_argument(n);
    g.count = static_cast<std::size_t>(c);
  } catch (const std::exception&) {
    throw UsageError("--grid count must be a non-negative integer, got '" + n + "'");
  }
  if (g.count == 0) throw UsageError("--grid is empty (count 0)");
  return g;
}

Grid rate_grid(const std::string& text, FrequencyConvention c) {
  const GridText g = split_grid(text);
  return {parse_quantity(g.lo, Dimension::Rate, c, "grid"), parse_quantity(g.hi, Dimension::Rate, c, "grid"),
          g.count};
}

Grid phase_grid(const std::string& text) {
  const GridText g = split_grid(text);
  return {parse_phase(g.lo, "grid").in_pi_units(), parse_phase(g.hi, "grid").in_pi_units(), g.count};
}

bool is_phase_axis(const std::string& axis) { return axis == "phi1" || axis == "phi2" || axis == "phi3"; }

Dimension axis_dimension(const std::string& axis) {
  if (axis == "t0") return Dimension::Dimensionless;
  if (axis == "R") return Dimension::Length;
  if (axis == "m") return Dimension::Mass;
  if (axis == "g") return Dimension::Coupling;
  return Dimension::Rate;
}

Grid axis_grid(const std::string& axis, const std::string& text, FrequencyConvention c) {
  if (is_phase_axis(axis)) return phase_grid(text);
  const GridText g = split_grid(text);
  const Dimension dim = axis_dimension(axis);
  return {parse_quantity(g.lo, dim, c, axis), parse_quantity(g.hi, dim, c, axis), g.count};
}

SweepConstraint parse_constraint(const std::string& s) {
  if (s.empty() || s == "none") return SweepConstraint::None;
  if (s == "gamma2-on-line") return SweepConstraint::Gamma2OnLine;
  if (s == "j-on-surface") return SweepConstraint::JOnSurface;
  if (s == "symmetric-on-surface") return SweepConstraint::SymmetricOnSurface;
  throw UsageError("unknown --constraint '" + s +
                   "' (none, gamma2-on-line, j-on-surface, symmetric-on-surface)");
}

std::vector<double> probe_grid(const Options& o, const Resolved& r) {
  if (!o.grid.empty()) return rate_grid(o.grid, r.convention).values();
  if (r.preset) return r.preset->spectrum.values();
  const double mhz = r.convention == FrequencyConvention::Cyclic ? 2e6 * std::numbers::pi : 1e6;
  return Grid{-5.0 * mhz, 5.0 * mhz, 2001}.values();
}

Preset as_preset(const Resolved& r, const std::vector<double>& detunings) {
  Preset p = r.preset ? *r.preset : Preset{};
  p.name = r.name;
  p.convention = r.convention;
  p.params = r.params;
  p.drive = r.drive;
  if (!detunings.empty()) p.spectrum = Grid{detunings.front(), detunings.back(), detunings.size()};
  return p;
}

json stamp(json j, const Options& o) {
  if (o.timestamp) j["generated_utc"] = utc_now();
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string run_eigen(const Options& o) {
  const Resolved r = resolve(o);
  const std::string axis = o.axis.empty() ? "J" : o.axis;
  if (axis != "J" && axis != "phi3") throw UsageError("eigen --axis must be J or phi3");
  if (o.grid.empty()) throw UsageError("eigen requires --grid");
  const Grid g = axis == "J" ? rate_grid(o.grid, r.convention) : phase_grid(o.grid);
  std::vector<io::EigenRow> rows;
  for (double v : g.values()) {
    SystemParams p = r.params;
    set_axis(p, axis, v);
    p = validate(p);
    rows.push_back({v, eigen_split(p), classify_point(p)});
  }
  const std::string column = axis == "J" ? "J" : "phi3_pi";
  if (o.format == "json") return dump(stamp(io::eigen_json(column, rows), o));
  std::ostringstream s;
  io::write_eigen_csv(s, column, rows);
  return s.str();
}

std::string run_spectrum(const Options& o) {
  const Resolved r = resolve(o);
  const SpectrumTable t = transmission_spectrum(r.params, r.drive, probe_grid(o, r), r.name, r.convention);
  if (o.format == "json") {
    json j = io::spectrum_json(t);
    if (o.timestamp) j["metadata"]["generated_utc"] = utc_now();
    return dump(j);
  }
  std::ostringstream s;
  io::write_spectrum_csv(s, t);
  return s.str();
}

std::string run_delay(const Options& o) {
  const Resolved r = resolve(o);
  std::vector<double> points;
  for (const auto& a : o.at) points.push_back(parse_quantity(a, Dimension::Rate, r.convention, "at"));
  if (points.empty()) points = probe_grid(o, r);
  const SteadyState ss = solve_steady(r.params, r.drive);
  const double h = default_delay_step(r.params);
  std::vector<GroupDelay> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) { out[i] = group_delay(r.params, ss, r.drive, points[i], h); });
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      rows.push_back({points[i], out[i].value, out[i].step, out[i].halvings});
    }
    return dump(stamp({{"columns", {"delta_p", "tau_g", "step", "halvings"}}, {"rows", rows}}, o));
  }
  std::ostringstream s;
  s << "delta_p,tau_g,step,halvings\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    s << format_double(points[i]) << ',' << format_double(out[i].value) << ',' << format_double(out[i].step)
      << ',' << out[i].halvings << '\n';
  }
  return s.str();
}

std::string run_sweep(const Options& o) {
  const Resolved r = resolve(o);
  std::string axis = o.axis;
  SweepConstraint constraint = parse_constraint(o.constraint);
  std::vector<double> values;
  if (!o.grid.empty()) {
    if (axis.empty()) throw UsageError("sweep --grid needs --axis");
    values = axis_grid(axis, o.grid, r.convention).values();
  } else if (r.preset && r.preset->sweep) {
    if (axis.empty()) axis = r.preset->sweep->axis;
    if (o.constraint.empty()) constraint = r.preset->sweep->constraint;
    values = r.preset->sweep->grid.values();
  } else {
    throw UsageError("sweep requires --axis and --grid unless the preset defines a sweep");
  }
  const Preset base = as_preset(r, r.preset ? r.preset->spectrum.values() : probe_grid(Options{}, r));
  const auto points = sweep_1d(base, axis, values, constraint);
  const std::string column = is_phase_axis(axis) ? axis + "_pi" : axis;
  if (o.format == "json") return dump(stamp(io::sweep_json(column, points), o));
  std::ostringstream s;
  io::write_sweep_csv(s, column, points);
  return s.str();
}

std::string run_phase_sweep(const Options& o) {
  const Resolved r = resolve(o);
  std::vector<Phase> phases;
  for (const auto& p : o.phases) phases.push_back(parse_phase(p, "phases"));
  if (phases.empty() && !o.grid.empty()) {
    for (double v : phase_grid(o.grid).values()) phases.push_back(Phase::pi_units(v));
  }
  if (phases.empty() && r.preset) phases = r.preset->phases;
  if (phases.empty()) throw UsageError("phase-sweep requires --phases or --grid unless the preset lists phases");
  const Preset base = as_preset(r, r.preset ? r.preset->spectrum.values() : probe_grid(Options{}, r));
  const auto points = sweep_phase(base, phases);
  if (o.format == "json") return dump(stamp(io::phase_sweep_json(points), o));
  std::ostringstream s;
  io::write_phase_sweep_csv(s, points);
  return s.str();
}

std::string run_crosscheck(const Options& o) {
  const Resolved r = resolve(o);
  const CrosscheckReport rep = crosscheck_appendix(r.params, r.drive, probe_grid(o, r), r.name);
  std::cerr << "crosscheck " << r.name << ": " << (rep.pass ? "PASS" : "FAIL") << " (max cw "
            << format_double(rep.cw.max_rel) << ", max ccw " << format_double(rep.ccw.max_rel) << ")\n";
  if (o.format == "json") return dump(stamp(io::to_json(rep), o));
  std::ostringstream s;
  io::write_crosscheck_csv(s, rep);
  return s.str();
}

std::string run_presets(const Options& o) {
  const FrequencyConvention c = parse_convention(o.convention);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& n : preset_names()) arr.push_back(io::to_json(preset(n, c)));
    return dump(stamp({{"presets", arr}}, o));
  }
  std::ostringstream s;
  s << "name,J,gamma1,gamma2,t0,phi3_pi,provenance\n";
  for (const auto& n : preset_names()) {
    const Preset p = preset(n, c);
    s << n << ',' << format_double(p.params.J) << ',' << format_double(p.params.gamma1) << ','
      << format_double(p.params.gamma2) << ',' << format_double(p.params.t0) << ','
      << format_double(p.params.phi3.in_pi_units()) << ",\"" << p.provenance << "\"\n";
  }
  return s.str();
}

std::string run_feasibility(const Options& o) {
  const Resolved r = resolve(o);
  const RangeReport rep = check_ranges(r.params, r.convention);
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
  if (o.format == "json") return dump(stamp(io::to_json(rep), o));
  std::ostringstream s;
  s << "source,quantity,lo_mhz,hi_mhz,value_mhz,in_range\n";
  for (const auto& row : rep.rows) {
    s << '"' << row.source << "\"," << row.quantity << ',' << format_double(row.lo) << ','
      << format_double(row.hi) << ',' << format_double(row.value) << ',' << (row.in_range ? 1 : 0) << '\n';
  }
  return s.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw io::IoError("failed writing to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io::IoError("cannot open output file '" + path + "'");
  f << text;
  f.close();
  if (!f) throw io::IoError("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exceptional-surface optomechanics: eigenvalues, OMIT spectra and group delay"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool params) {
    if (params) {
      sub->add_option("--preset", o.preset, "Named parameter set (see `esomit presets`)");
      sub->add_option("--config", o.config, "key = value parameter file");
      sub->add_option("--set", o.sets, "Override one parameter, key=value (repeatable)");
    }
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Output file (default stdout)");
    sub->add_option("--convention", o.convention, "How Hz values map to rates")
        ->check(CLI::IsMember({"angular", "cyclic"}));
    sub->add_flag("--timestamp", o.timestamp, "Add a generation time to JSON metadata");
  };

  auto* eigen = app.add_subcommand("eigen", "Eigenvalue branches and phase class over a J or phi3 grid");
  common(eigen, true);
  eigen->add_option("--axis", o.axis, "J or phi3");
  eigen->add_option("--grid", o.grid, "min:max:count, e.g. 0MHz:2MHz:201 or 1pi:2pi:101");

  auto* spectrum = app.add_subcommand("spectrum", "Probe transmission and group delay over detuning");
  common(spectrum, true);
  spectrum->add_option("--grid", o.grid, "Probe detuning min:max:count (use --grid=-5MHz:5MHz:2001)");

  auto* delay = app.add_subcommand("delay", "Group delay at chosen probe detunings");
  common(delay, true);
  delay->add_option("--grid", o.grid, "Probe detuning min:max:count");
  delay->add_option("--at", o.at, "Single probe detuning (repeatable)");

  auto* sweep = app.add_subcommand("sweep", "Spectra over a swept parameter");
  common(sweep, true);
  sweep->add_option("--axis", o.axis, "Parameter to sweep (phase axes in pi units)");
  sweep->add_option("--grid", o.grid, "Axis min:max:count");
  sweep->add_option("--constraint", o.constraint,
                    "none, gamma2-on-line, j-on-surface or symmetric-on-surface");

  auto* phase = app.add_subcommand("phase-sweep", "Spectra over loop phase phi3");
  common(phase, true);
  phase->add_option("--phases", o.phases, "phi3 values, e.g. 1.3pi,1.5pi (repeatable)")->delimiter(',');
  phase->add_option("--grid", o.grid, "phi3 min:max:count");

  auto* cross = app.add_subcommand("crosscheck", "Compare the closed-form sidebands with the direct solve");
  common(cross, true);
  cross->add_option("--grid", o.grid, "Probe detuning min:max:count");

  auto* presets = app.add_subcommand("presets", "List the preset catalog");
  common(presets, false);

  auto* feas = app.add_subcommand("feasibility", "Compare rates with published experimental ranges");
  common(feas, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    std::string text;
    if (eigen->parsed()) text = run_eigen(o);
    else if (spectrum->parsed()) text = run_spectrum(o);
    else if (delay->parsed()) text = run_delay(o);
    else if (sweep->parsed()) text = run_sweep(o);
    else if (phase->parsed()) text = run_phase_sweep(o);
    else if (cross->parsed()) text = run_crosscheck(o);
    else if (presets->parsed()) text = run_presets(o);
    else text = run_feasibility(o);
    emit(text, o.out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}
