#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "esomit/model.hpp"
#include "esomit/steady_state.hpp"

namespace esomit {

using Matrix5c = Eigen::Matrix<cdouble, 5, 5>;
using Vector5c = Eigen::Matrix<cdouble, 5, 1>;

/// Unknown order of the fluctuation system.
enum FluctuationIndex : int { kDeltaX = 0, kCwMinus, kCcwMinus, kCwPlusConj, kCcwPlusConj };

/// First-order sideband equations at probe-pump offset xi, in physical units
/// (delta_x in m, sidebands in sqrt(photons)).
///
/// Row 0 is the mechanical balance with the radiation force hbar g |a|^2,
/// rows 1-2 the probe-frequency sidebands, rows 3-4 the conjugated
/// anti-Stokes sidebands. All loop terms use t3 sqrt(gamma1 gamma2) as in the
/// mean-field equations of motion.
struct FluctuationSystem {
  Matrix5c matrix;
  Vector5c rhs;
  cdouble f1;       // gamma - i xi + i (Delta - g x_bar)
  cdouble f2;       // gamma - i xi - i (Delta - g x_bar)
  cdouble chi_inv;  // m (omega_m^2 - xi^2 - i xi gamma_m)
  double Ep = 0.0;
};

FluctuationSystem fluctuation_system(const SystemParams& p, const SteadyState& ss, const Drive& d,
                                     double xi);

struct ResponseSolution {
  cdouble delta_x;
  cdouble da_cw_m;
  cdouble da_ccw_m;
  cdouble da_cw_p;   // conjugated anti-Stokes component
  cdouble da_ccw_p;
  cdouble f1;
  cdouble f2;
  cdouble chi_inv;
  double Ep = 0.0;
  double xi = 0.0;
  /// ||A x - b|| / ||b|| on the equilibrated system (0 when b = 0).
  double relative_residual = 0.0;
};

inline constexpr double kPivotTolerance = 1e-14;

/// Partial-pivoting dense solve of fluctuation_system. Throws
/// Error{SingularSystem} naming xi when a pivot falls below
/// kPivotTolerance times the equilibrated matrix max-norm.
ResponseSolution solve_response(const SystemParams& p, const SteadyState& ss, const Drive& d, double xi);

/// t = t2 - (t3 sqrt(gamma1) da_cw + sqrt(gamma2) da_ccw) / Ep at Port 2.
cdouble transmission(const SystemParams& p, const ResponseSolution& r);

/// Transmission at probe detuning delta_p = omega_p - omega0 for a solved
/// steady state; xi = delta_p + Delta_a.
cdouble transmission_at(const SystemParams& p, const SteadyState& ss, const Drive& d, double delta_p);

struct GroupDelay {
  double value = 0.0;  // s; > 0 slow light, < 0 fast light
  double step = 0.0;   // step actually used
  int halvings = 0;    // > 0 means the first step did not converge
  bool converged_first_try() const { return halvings == 0; }
};

struct DelayOptions {
  double relative_agreement = 0.01;
  double absolute_floor = 1e-12;  // s
  int max_halvings = 6;
};

/// d arg f / dx by central differences with branch-cut unwrapping and step
/// halving until two successive estimates agree.
GroupDelay phase_slope(const std::function<cdouble(double)>& f, double x, double h,
                       const DelayOptions& opts = {});

/// Default finite-difference step, 1e-4 gamma.
inline double default_delay_step(const SystemParams& p) { return 1e-4 * p.gamma_half(); }

GroupDelay group_delay(const SystemParams& p, const SteadyState& ss, const Drive& d, double delta_p,
                       double h, const DelayOptions& opts = {});
/// Convenience form that solves the steady state itself.
GroupDelay group_delay(const SystemParams& p, const Drive& d, double delta_p, double h);

struct SpectrumRow {
  double delta_p = 0.0;
  cdouble t;
  double T = 0.0;
  double tau_g = 0.0;
};

struct SpectrumMeta {
  std::string preset;
  SystemParams params;
  Drive drive;
  FrequencyConvention convention = FrequencyConvention::Angular;
  double pump_detuning = 0.0;
  SteadyState steady;
};

struct SpectrumTable {
  SpectrumMeta meta;
  std::vector<SpectrumRow> rows;
};

/// Strictly increasing probe-detuning grid.
struct Grid {
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  std::vector<double> values() const;
};

void require_increasing(const std::vector<double>& grid);

/// Solves the steady state once, then every row (concurrently) with its
/// group delay. Row failures are rethrown with the row index.
SpectrumTable transmission_spectrum(const SystemParams& p, const Drive& d,
                                    const std::vector<double>& delta_p,
                                    const std::string& preset = {},
                                    FrequencyConvention convention = FrequencyConvention::Angular);

}  // namespace esomit
