#include "esomit/model.hpp"

#include <cmath>

#include "esomit/error.hpp"

namespace esomit {

namespace {

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::InvalidValue, field, std::string(field) + " must be finite");
  }
}

void require_positive(double v, const char* field) {
  require_finite(v, field);
  if (!(v > 0.0)) {
    throw Error(ErrorKind::NegativeRate, field, std::string(field) + " must be > 0");
  }
}

const std::string& need(const RawParams& raw, const char* key) {
  auto it = raw.find(key);
  if (it == raw.end()) {
    throw Error(ErrorKind::MissingField, key, std::string("missing required field '") + key + "'");
  }
  return it->second;
}

}  // namespace

SystemParams validate(SystemParams p) {
  require_positive(p.omega0, "omega0");
  require_positive(p.gamma0, "gamma0");
  require_positive(p.gamma1, "gamma1");
  require_positive(p.gamma2, "gamma2");
  require_positive(p.R, "R");
  require_positive(p.m, "m");
  require_positive(p.omega_m, "omega_m");
  require_positive(p.gamma_m, "gamma_m");
  require_finite(p.J, "J");
  if (p.J < 0.0) throw Error(ErrorKind::NegativeRate, "J", "J must be >= 0");
  require_finite(p.t0, "t0");
  if (p.t0 < 0.0 || p.t0 > 1.0) {
    throw Error(ErrorKind::T0OutOfRange, "t0", "t0 must lie in [0, 1], got " + format_double(p.t0));
  }
  require_finite(p.phi1.in_pi_units(), "phi1");
  require_finite(p.phi2.in_pi_units(), "phi2");
  require_finite(p.phi3.in_pi_units(), "phi3");
  if (p.g_override) {
    require_finite(p.g, "g");
    if (p.g < 0.0) throw Error(ErrorKind::NegativeRate, "g", "g must be >= 0");
  } else {
    p.g = p.omega0 / p.R;
  }
  return p;
}

SystemParams build_system(const RawParams& raw, FrequencyConvention convention) {
  auto rate = [&](const char* key) {
    return parse_quantity(need(raw, key), Dimension::Rate, convention, key);
  };
  SystemParams p;
  p.omega0 = rate("omega0");
  p.gamma0 = rate("gamma0");
  p.gamma1 = rate("gamma1");
  p.gamma2 = rate("gamma2");
  p.J = rate("J");
  p.t0 = parse_quantity(need(raw, "t0"), Dimension::Dimensionless, convention, "t0");
  p.phi3 = parse_phase(need(raw, "phi3"), "phi3");
  p.phi1 = raw.contains("phi1") ? parse_phase(raw.at("phi1"), "phi1") : p.phi3;
  p.phi2 = raw.contains("phi2") ? parse_phase(raw.at("phi2"), "phi2") : p.phi3;
  p.R = parse_quantity(need(raw, "R"), Dimension::Length, convention, "R");
  p.m = parse_quantity(need(raw, "m"), Dimension::Mass, convention, "m");
  p.omega_m = rate("omega_m");
  p.gamma_m = rate("gamma_m");
  if (auto it = raw.find("g"); it != raw.end()) {
    p.g = parse_quantity(it->second, Dimension::Coupling, convention, "g");
    p.g_override = true;
  }
  if (auto it = raw.find("loop_coupling"); it != raw.end()) {
    if (it->second == "on" || it->second == "true" || it->second == "1") {
      p.loop_coupling = true;
    } else if (it->second == "off" || it->second == "false" || it->second == "0") {
      p.loop_coupling = false;
    } else {
      throw Error(ErrorKind::InvalidValue, "loop_coupling", "expected on/off");
    }
  }
  return validate(p);
}

DerivedRates derived_rates(const SystemParams& p) {
  DerivedRates r;
  const double root = geometric_coupling(p);
  r.gamma_half = p.gamma_half();
  r.s = p.t0 * root;
  r.t1 = p.t0 * p.phi1.unit();
  r.t2 = p.t0 * p.phi2.unit();
  r.t3 = p.loop_coupling ? p.t0 * p.phi3.unit() : cdouble{};
  r.lambda = cdouble{0.0, root} * r.t3;
  return r;
}

DriveAmplitudes drive_amplitudes(const Drive& d) {
  if (!(d.omega_c > 0.0)) {
    throw Error(ErrorKind::NonPositiveFrequency, "omega_c", "pump frequency must be > 0");
  }
  if (!(d.omega_p > 0.0)) {
    throw Error(ErrorKind::NonPositiveFrequency, "omega_p", "probe frequency must be > 0");
  }
  if (!(d.Pc > 0.0)) throw Error(ErrorKind::InvalidValue, "Pc", "pump power must be > 0");
  if (d.Pp < 0.0) throw Error(ErrorKind::InvalidValue, "Pp", "probe power must be >= 0");
  return {std::sqrt(d.Pc / (kHbar * d.omega_c)), std::sqrt(d.Pp / (kHbar * d.omega_p))};
}

Drive make_drive(const SystemParams& p, double Pc, double pump_det, double probe_det, double Pp) {
  Drive d;
  d.Pc = Pc;
  d.Pp = Pp < 0.0 ? kDefaultProbeFraction * Pc : Pp;
  d.omega_c = p.omega0 - pump_det;
  d.omega_p = p.omega0 + probe_det;
  return d;
}

Drive build_drive(const SystemParams& p, const RawParams& raw, FrequencyConvention convention) {
  const double Pc = parse_quantity(need(raw, "Pc"), Dimension::Power, convention, "Pc");
  const double Pp = raw.contains("Pp")
                        ? parse_quantity(raw.at("Pp"), Dimension::Power, convention, "Pp")
                        : -1.0;
  const double pump_det = raw.contains("Delta_a")
                              ? parse_quantity(raw.at("Delta_a"), Dimension::Rate, convention, "Delta_a")
                              : p.omega_m;
  const double probe_det = raw.contains("delta_p")
                               ? parse_quantity(raw.at("delta_p"), Dimension::Rate, convention, "delta_p")
                               : 0.0;
  Drive d = make_drive(p, Pc, pump_det, probe_det, Pp);
  drive_amplitudes(d);  // validates
  return d;
}

}  // namespace esomit
