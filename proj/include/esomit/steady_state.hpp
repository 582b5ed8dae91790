#pragma once

#include <utility>
#include <vector>

#include "esomit/model.hpp"

namespace esomit {

struct SteadyState {
  cdouble a_cw;
  cdouble a_ccw;
  double x_bar = 0.0;  // m
  double u = 0.0;      // g * x_bar, rad/s
  std::vector<double> all_roots;
  double residual = 0.0;  // F(u) at the selected root, rad/s

  bool multistable() const { return all_roots.size() > 1; }
  double intensity() const { return std::norm(a_cw) + std::norm(a_ccw); }
};

/// Mean CW/CCW amplitudes for a given optical shift u = g x_bar.
/// Throws Error{SingularDenominator} at an exact optical resonance pole.
std::pair<cdouble, cdouble> intracavity_steady(const SystemParams& p, const Drive& d, double u);

/// hbar g^2 / (m omega_m^2): shift per intracavity photon, rad/s.
double shift_per_photon(const SystemParams& p);

/// F(u) = u - shift_per_photon * (|a_cw(u)|^2 + |a_ccw(u)|^2). Roots are the
/// self-consistent mean fields.
double steady_residual(const SystemParams& p, const Drive& d, double u);

struct SteadyOptions {
  double residual_tol = 1e-12;  // |F| <= tol * max(u, gamma)
  int max_iterations = 200;
  std::size_t max_scan_points = 2'000'000;
};

/// Enumerates every real root of F on [0, u_max] and keeps the smallest as
/// the operating branch.
SteadyState solve_steady(const SystemParams& p, const Drive& d, const SteadyOptions& opts = {});

/// Upper end of the root search interval used by solve_steady.
double steady_search_limit(const SystemParams& p, const Drive& d);

}  // namespace esomit
