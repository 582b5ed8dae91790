#pragma once

#include <string>
#include <utility>
#include <vector>

#include "esomit/linear_response.hpp"

namespace esomit {

/// Closed-form sideband coefficients evaluated exactly as published,
/// including their internal conventions (J* taken as a complex conjugate,
/// h_nl = h_n + h_l for n < l and h_n - h_l for n > l).
struct AppendixCoefficients {
  cdouble A1, A2, A3, A4, B;
  cdouble d1, d2;
  cdouble h1, h2, h3, h4, h5, h6, h7;
  cdouble k1, k2;
  double B_scale = 0.0;  // sum of |terms| of B
};

/// h_nl pairing rule.
inline cdouble pair_h(int n, int l, const AppendixCoefficients& c) {
  const cdouble hs[] = {{}, c.h1, c.h2, c.h3, c.h4, c.h5, c.h6, c.h7};
  return n < l ? hs[n] + hs[l] : hs[n] - hs[l];
}

AppendixCoefficients appendix_coefficients(const SystemParams& p, const SteadyState& ss, const Drive& d,
                                           double xi);

/// (da_cw^-, da_ccw^-) from the closed forms. Throws Error{ZeroB}.
std::pair<cdouble, cdouble> appendix_response(const SystemParams& p, const SteadyState& ss,
                                              const Drive& d, double xi);

struct ComponentDeviation {
  std::string name;
  double max_rel = 0.0;
  double median_rel = 0.0;
  double worst_delta_p = 0.0;
};

struct DiscrepancyRow {
  double delta_p = 0.0;
  std::string component;
  cdouble direct;
  cdouble appendix;
  double rel_dev = 0.0;
};

struct CrosscheckReport {
  std::string preset;
  std::size_t grid_points = 0;
  std::size_t zero_b_rows = 0;
  ComponentDeviation cw;
  ComponentDeviation ccw;
  bool pass = false;
  double threshold = 1e-6;
  std::vector<DiscrepancyRow> worst_rows;  // populated on FAIL
  std::vector<std::string> notes;
};

inline constexpr double kCrosscheckThreshold = 1e-6;

/// Compares the direct solve with the closed forms over a probe-detuning grid.
/// A FAIL verdict is data, not an error.
CrosscheckReport crosscheck_appendix(const SystemParams& p, const Drive& d,
                                     const std::vector<double>& delta_p, const std::string& preset = {});

}  // namespace esomit
