#include "esomit/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "esomit/error.hpp"

namespace esomit::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string rate(double v) { return format_double(v) + " rad/s"; }

const char* kSpectrumHeader = "delta_p,re_t,im_t,T,tau_g";

void write_row(std::ostream& out, const SpectrumRow& r) {
  out << format_double(r.delta_p) << ',' << format_double(r.t.real()) << ','
      << format_double(r.t.imag()) << ',' << format_double(r.T) << ',' << format_double(r.tau_g);
}

json rows_json(const SpectrumTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    rows.push_back({r.delta_p, r.t.real(), r.t.imag(), r.T, r.tau_g});
  }
  return rows;
}

}  // namespace

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorKind::InvalidValue, text, "expected key=value, got '" + text + "'");
  }
  return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

RawParams parse_config(std::istream& in) {
  RawParams raw;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto [k, v] = split_assignment(line);
    raw[k] = v;
  }
  return raw;
}

RawParams read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return parse_config(in);
}

RawParams to_raw(const SystemParams& p) {
  RawParams raw{
      {"omega0", rate(p.omega0)},   {"gamma0", rate(p.gamma0)},   {"gamma1", rate(p.gamma1)},
      {"gamma2", rate(p.gamma2)},   {"J", rate(p.J)},             {"t0", format_double(p.t0)},
      {"phi1", format_phase(p.phi1)}, {"phi2", format_phase(p.phi2)}, {"phi3", format_phase(p.phi3)},
      {"R", format_double(p.R) + " m"}, {"m", format_double(p.m) + " kg"},
      {"omega_m", rate(p.omega_m)}, {"gamma_m", rate(p.gamma_m)},
      {"loop_coupling", p.loop_coupling ? "on" : "off"},
  };
  if (p.g_override) raw["g"] = format_double(p.g) + " rad/(s*m)";
  return raw;
}

RawParams to_raw(const SystemParams& p, const Drive& d) {
  RawParams raw = to_raw(p);
  raw["Pc"] = format_double(d.Pc) + " W";
  raw["Pp"] = format_double(d.Pp) + " W";
  raw["Delta_a"] = rate(pump_detuning(p, d));
  return raw;
}

json to_json(const SystemParams& p) {
  return {
      {"omega0", p.omega0},       {"gamma0", p.gamma0},
      {"gamma1", p.gamma1},       {"gamma2", p.gamma2},
      {"J", p.J},                 {"t0", p.t0},
      {"phi1_pi", p.phi1.in_pi_units()}, {"phi2_pi", p.phi2.in_pi_units()},
      {"phi3_pi", p.phi3.in_pi_units()}, {"R", p.R},
      {"m", p.m},                 {"omega_m", p.omega_m},
      {"gamma_m", p.gamma_m},     {"g", p.g},
      {"g_override", p.g_override}, {"loop_coupling", p.loop_coupling},
  };
}

json to_json(const Drive& d) {
  return {{"Pc", d.Pc}, {"Pp", d.Pp}, {"omega_c", d.omega_c}, {"omega_p", d.omega_p}};
}

json to_json(const SteadyState& s) {
  return {
      {"a_cw", {s.a_cw.real(), s.a_cw.imag()}},
      {"a_ccw", {s.a_ccw.real(), s.a_ccw.imag()}},
      {"x_bar", s.x_bar},
      {"u", s.u},
      {"all_roots", s.all_roots},
      {"residual", s.residual},
      {"multistable", s.multistable()},
  };
}

json to_json(const Preset& p) {
  json j{
      {"name", p.name},
      {"provenance", p.provenance},
      {"assumptions", p.assumptions},
      {"convention", std::string(to_string(p.convention))},
      {"params", to_json(p.params)},
      {"drive", to_json(p.drive)},
      {"pump_detuning", pump_detuning(p.params, p.drive)},
      {"spectrum_grid", {{"min", p.spectrum.min}, {"max", p.spectrum.max}, {"count", p.spectrum.count}}},
  };
  if (p.sweep) {
    j["sweep"] = {{"axis", p.sweep->axis},
                  {"min", p.sweep->grid.min},
                  {"max", p.sweep->grid.max},
                  {"count", p.sweep->grid.count}};
  }
  if (!p.phases.empty()) {
    json ph = json::array();
    for (Phase x : p.phases) ph.push_back(x.in_pi_units());
    j["phases_pi"] = ph;
  }
  return j;
}

json to_json(const CrosscheckReport& r) {
  auto comp = [](const ComponentDeviation& c) {
    return json{{"name", c.name}, {"max", c.max_rel}, {"median", c.median_rel}, {"worst_delta_p", c.worst_delta_p}};
  };
  json worst = json::array();
  for (const auto& w : r.worst_rows) {
    worst.push_back({{"delta_p", w.delta_p},
                     {"component", w.component},
                     {"direct", {w.direct.real(), w.direct.imag()}},
                     {"appendix", {w.appendix.real(), w.appendix.imag()}},
                     {"rel_dev", w.rel_dev}});
  }
  return {
      {"preset", r.preset},
      {"grid_points", r.grid_points},
      {"zero_b_rows", r.zero_b_rows},
      {"threshold", r.threshold},
      {"verdict", r.pass ? "PASS" : "FAIL"},
      {"components", {comp(r.cw), comp(r.ccw)}},
      {"discrepancies", worst},
      {"notes", r.notes},
  };
}

json to_json(const RangeReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"source", row.source},
                    {"quantity", row.quantity},
                    {"range_mhz", {row.lo, row.hi}},
                    {"value_mhz", row.value},
                    {"in_range", row.in_range}});
  }
  return {{"gamma_in_range", r.gamma_in_range},
          {"J_in_range", r.J_in_range},
          {"rows", rows},
          {"warnings", r.warnings}};
}

void write_spectrum_csv(std::ostream& out, const SpectrumTable& t) {
  out << kSpectrumHeader << '\n';
  for (const auto& r : t.rows) {
    write_row(out, r);
    out << '\n';
  }
}

json spectrum_json(const SpectrumTable& t) {
  return {
      {"metadata",
       {{"preset", t.meta.preset},
        {"convention", std::string(to_string(t.meta.convention))},
        {"params", to_json(t.meta.params)},
        {"drive", to_json(t.meta.drive)},
        {"pump_detuning", t.meta.pump_detuning},
        {"steady_state", to_json(t.meta.steady)}}},
      {"columns", {"delta_p", "re_t", "im_t", "T", "tau_g"}},
      {"rows", rows_json(t)},
  };
}

void write_eigen_csv(std::ostream& out, const std::string& axis, const std::vector<EigenRow>& rows) {
  out << axis << ",omega_plus,omega_minus,kappa_plus,kappa_minus,class\n";
  for (const auto& r : rows) {
    out << format_double(r.axis) << ',' << format_double(r.split.omega_plus) << ','
        << format_double(r.split.omega_minus) << ',' << format_double(r.split.kappa_plus) << ','
        << format_double(r.split.kappa_minus) << ',' << to_string(r.cls.kind) << '\n';
  }
}

json eigen_json(const std::string& axis, const std::vector<EigenRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({r.axis, r.split.omega_plus, r.split.omega_minus, r.split.kappa_plus, r.split.kappa_minus,
                   std::string(to_string(r.cls.kind))});
  }
  return {{"columns", {axis, "omega_plus", "omega_minus", "kappa_plus", "kappa_minus", "class"}}, {"rows", out}};
}

void write_sweep_csv(std::ostream& out, const std::string& axis, const std::vector<SweepPoint>& points) {
  out << axis << ',' << kSpectrumHeader << '\n';
  for (const auto& pt : points) {
    for (const auto& r : pt.table.rows) {
      out << format_double(pt.axis_value) << ',';
      write_row(out, r);
      out << '\n';
    }
  }
}

json sweep_json(const std::string& axis, const std::vector<SweepPoint>& points) {
  json arr = json::array();
  for (const auto& pt : points) {
    arr.push_back({{axis, pt.axis_value}, {"params", to_json(pt.params)}, {"rows", rows_json(pt.table)}});
  }
  return {{"axis", axis}, {"columns", {"delta_p", "re_t", "im_t", "T", "tau_g"}}, {"points", arr}};
}

void write_phase_sweep_csv(std::ostream& out, const std::vector<PhasePoint>& points) {
  out << "phi3_pi,on_es,class," << kSpectrumHeader << '\n';
  for (const auto& pt : points) {
    for (const auto& r : pt.table.rows) {
      out << format_double(pt.phi3.in_pi_units()) << ',' << (pt.on_es ? 1 : 0) << ','
          << to_string(pt.cls.kind) << ',';
      write_row(out, r);
      out << '\n';
    }
  }
}

json phase_sweep_json(const std::vector<PhasePoint>& points) {
  json arr = json::array();
  for (const auto& pt : points) {
    arr.push_back({{"phi3_pi", pt.phi3.in_pi_units()},
                   {"on_es", pt.on_es},
                   {"class", std::string(to_string(pt.cls.kind))},
                   {"rows", rows_json(pt.table)}});
  }
  return {{"columns", {"delta_p", "re_t", "im_t", "T", "tau_g"}}, {"points", arr}};
}

void write_crosscheck_csv(std::ostream& out, const CrosscheckReport& r) {
  out << "component,max_rel,median_rel,worst_delta_p,verdict\n";
  for (const auto* c : {&r.cw, &r.ccw}) {
    out << c->name << ',' << format_double(c->max_rel) << ',' << format_double(c->median_rel) << ','
        << format_double(c->worst_delta_p) << ',' << (r.pass ? "PASS" : "FAIL") << '\n';
  }
}

}  // namespace esomit::io
