#pragma once

#include <string>
#include <vector>

#include "esomit/model.hpp"

namespace esomit {

/// Point scatterer near the resonator. `alpha_pol` is the polarizability.
struct NanoparticleSpec {
  double alpha_pol = 0.0;  // m^3
  double f_at_r = 0.0;     // field profile at the particle, [0, 1]
  double V_m = 0.0;        // mode volume, m^3
};

struct FiberCouplingSpec {
  double eta = 0.0;  // overlap factor
  double n = 1.0;    // refractive index
  double R = 0.0;    // m
};

struct BackscatterCoupling {
  double J = 0.0;         // magnitude consumed by the model
  double sign = 1.0;      // sign of the frequency pull -alpha f^2 omega0 / V_m
};

/// 2J = -alpha f^2 omega0 / V_m. Throws Error{ZeroModeVolume}.
BackscatterCoupling coupling_from_nanoparticle(const NanoparticleSpec& spec, double omega0);

/// gamma = eta / (2 tau_c), tau_c = 2 n pi R / c.
double fiber_coupling_rate(const FiberCouplingSpec& spec);

/// Round-trip time 2 n pi R / c.
double round_trip_time(double n, double R);

struct RangeRow {
  std::string source;
  std::string quantity;  // "gamma1", "gamma2" or "J"
  double lo = 0.0;       // MHz
  double hi = 0.0;
  double value = 0.0;    // MHz, checked value
  bool in_range = true;
};

struct RangeReport {
  bool gamma_in_range = true;  // gamma1, gamma2 in the union [0.1, 12] MHz
  bool J_in_range = true;      // J in the union [0, 200] MHz
  std::vector<RangeRow> rows;  // per published experiment
  std::vector<std::string> warnings;
  bool all_in_range() const { return gamma_in_range && J_in_range; }
};

RangeReport check_ranges(const SystemParams& p,
                         FrequencyConvention convention = FrequencyConvention::Angular);

}  // namespace esomit
