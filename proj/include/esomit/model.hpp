#pragma once

#include <cmath>
#include <map>
#include <string>

#include "esomit/units.hpp"

namespace esomit {

/// Static parameters of the CW/CCW optical pair coupled to one mechanical
/// mode. Rates are in rad/s, lengths in m, masses in kg.
struct SystemParams {
  double omega0 = 0.0;   // optical resonance
  double gamma0 = 0.0;   // intrinsic loss
  double gamma1 = 0.0;   // fiber coupling, port 1
  double gamma2 = 0.0;   // fiber coupling, port 2
  double J = 0.0;        // symmetric backscattering
  double t0 = 1.0;       // fiber transmission magnitude
  Phase phi1;
  Phase phi2;
  Phase phi3;
  double R = 0.0;        // resonator radius
  double m = 0.0;        // effective mass
  double omega_m = 0.0;  // mechanical frequency
  double gamma_m = 0.0;  // mechanical damping
  double g = 0.0;        // optomechanical frequency pull, rad/(s m)
  bool g_override = false;
  /// The engineered CCW<-CW loop path. Off means t3 = 0 (isolator removed).
  bool loop_coupling = true;

  /// gamma = (gamma0 + gamma1 + gamma2) / 2
  double gamma_half() const { return 0.5 * (gamma0 + gamma1 + gamma2); }
};

/// Pump and probe. Frequencies are absolute angular frequencies.
struct Drive {
  double Pc = 0.0;
  double Pp = 0.0;
  double omega_c = 0.0;
  double omega_p = 0.0;
};

struct DerivedRates {
  double gamma_half = 0.0;
  double s = 0.0;  // t0 * sqrt(gamma1 gamma2)
  cdouble t1, t2, t3;
  cdouble lambda;  // i sqrt(gamma1 gamma2) t3
};

struct DriveAmplitudes {
  double Ec = 0.0;  // sqrt(photons / s)
  double Ep = 0.0;
};

/// Checks every invariant of SystemParams and fills g = omega0/R unless the
/// override flag is set. Throws Error naming the first offending field.
SystemParams validate(SystemParams p);

/// Raw key/value ingestion ("gamma1" -> "1 MHz"). Recognised keys are listed
/// in README; phi1/phi2 default to phi3, g defaults to omega0/R.
using RawParams = std::map<std::string, std::string>;
SystemParams build_system(const RawParams& raw,
                          FrequencyConvention convention = FrequencyConvention::Angular);

DerivedRates derived_rates(const SystemParams& p);

/// sqrt(gamma1 gamma2); the loop coupling magnitude before the t0 factor.
inline double geometric_coupling(const SystemParams& p) {
  return std::sqrt(p.gamma1 * p.gamma2);
}

DriveAmplitudes drive_amplitudes(const Drive& d);

/// Pump detuning Delta_a = omega0 - omega_c.
inline double pump_detuning(const SystemParams& p, const Drive& d) { return p.omega0 - d.omega_c; }

/// Builds a drive from pump power, pump detuning Delta_a and probe detuning
/// delta_p. Probe power defaults to 1e-4 Pc when negative.
Drive make_drive(const SystemParams& p, double Pc, double pump_detuning, double probe_detuning = 0.0,
                 double Pp = -1.0);

/// Drive keys accepted by build_drive: Pc, Pp, Delta_a, delta_p.
Drive build_drive(const SystemParams& p, const RawParams& raw,
                  FrequencyConvention convention = FrequencyConvention::Angular);

inline constexpr double kDefaultProbeFraction = 1e-4;

}  // namespace esomit
