#include "esomit/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>

#include "esomit/error.hpp"

namespace esomit {

namespace {

constexpr double kDenominatorEps = 1e-14;

double total_intensity(const SystemParams& p, const Drive& d, double u) {
  auto [cw, ccw] = intracavity_steady(p, d, u);
  return std::norm(cw) + std::norm(ccw);
}

// Sampling step that resolves an optical line of half-width gamma.
double line_step(const SystemParams& p) { return p.gamma_half() / 16.0; }

}  // namespace

std::pair<cdouble, cdouble> intracavity_steady(const SystemParams& p, const Drive& d, double u) {
  const DerivedRates r = derived_rates(p);
  const double Ec = drive_amplitudes(d).Ec;
  const double root = geometric_coupling(p);
  const double delta = pump_detuning(p, d) + p.J;
  const cdouble I{0.0, 1.0};

  const cdouble D = I * (delta - u) + r.gamma_half;
  const cdouble loop = r.t3 * root;  // t3 sqrt(gamma1 gamma2)
  const cdouble den = D * D + loop * loop + p.J * p.J;
  const double scale = std::norm(D) + p.J * p.J + p.gamma1 * p.gamma2 * p.t0 * p.t0;
  if (std::abs(den) < kDenominatorEps * scale) {
    throw Error(ErrorKind::SingularDenominator, "u",
                "steady-state denominator vanishes at u = " + format_double(u));
  }
  const double s1 = std::sqrt(p.gamma1);
  const double s2 = std::sqrt(p.gamma2);
  const cdouble cw = Ec * (s1 * D - r.t1 * s2 * (loop + I * p.J)) / den;
  const cdouble ccw = Ec * (r.t1 * s2 * D + s1 * (loop - I * p.J)) / den;
  return {cw, ccw};
}

double shift_per_photon(const SystemParams& p) {
  return kHbar * p.g * p.g / (p.m * p.omega_m * p.omega_m);
}

double steady_residual(const SystemParams& p, const Drive& d, double u) {
  return u - shift_per_photon(p) * total_intensity(p, d, u);
}

double steady_search_limit(const SystemParams& p, const Drive& d) {
  const double K = shift_per_photon(p);
  const double gamma = p.gamma_half();
  // Optical poles sit at u ~ Delta -+ |w|; sample past them to find the
  // largest intensity any root can draw on.
  const DerivedRates r = derived_rates(p);
  const cdouble loop = r.t3 * geometric_coupling(p);
  const double w = std::abs(std::sqrt(loop * loop + p.J * p.J));
  const double delta = pump_detuning(p, d) + p.J;
  const double scan_end = std::max(delta + w + 64.0 * gamma, 64.0 * gamma);
  const double step = line_step(p);
  const auto n = static_cast<std::size_t>(std::min(scan_end / step, 4.0e6)) + 2;
  double peak = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    const double u = scan_end * static_cast<double>(i) / static_cast<double>(n);
    peak = std::max(peak, total_intensity(p, d, u));
  }
  double u_max = 2.0 * K * peak + gamma;
  while (steady_residual(p, d, u_max) <= 0.0) u_max *= 2.0;
  return u_max;
}

SteadyState solve_steady(const SystemParams& p, const Drive& d, const SteadyOptions& opts) {
  SteadyState out;
  const double Ec = drive_amplitudes(d).Ec;
  const double gamma = p.gamma_half();
  const double K = shift_per_photon(p);

  if (Ec == 0.0) {
    out.all_roots = {0.0};
    return out;
  }
  if (K == 0.0) {
    std::tie(out.a_cw, out.a_ccw) = intracavity_steady(p, d, 0.0);
    out.all_roots = {0.0};
    return out;
  }

  const double u_max = steady_search_limit(p, d);
  const double step = std::min(line_step(p), u_max / 1000.0);
  const auto n = static_cast<std::size_t>(
      std::min(std::ceil(u_max / step), static_cast<double>(opts.max_scan_points)));

  auto F = [&](double u) { return steady_residual(p, d, u); };
  auto tolerance_at = [&](double u) { return opts.residual_tol * std::max(std::abs(u), gamma); };

  double best_residual = std::numeric_limits<double>::infinity();
  double prev_u = 0.0;
  double prev_f = F(0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double u = u_max * static_cast<double>(i) / static_cast<double>(n);
    const double f = F(u);
    if (prev_f == 0.0) {
      out.all_roots.push_back(prev_u);
    } else if ((prev_f < 0.0) != (f < 0.0) && f != 0.0) {
      std::uintmax_t iters = static_cast<std::uintmax_t>(opts.max_iterations);
      auto done = [&](double a, double b) {
        return std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)) ||
               std::min(std::abs(F(a)), std::abs(F(b))) <= 0.25 * tolerance_at(b);
      };
      auto [lo, hi] = boost::math::tools::toms748_solve(F, prev_u, u, prev_f, f, done, iters);
      const double f_lo = F(lo);
      const double f_hi = F(hi);
      const double root = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
      const double res = std::min(std::abs(f_lo), std::abs(f_hi));
      best_residual = std::min(best_residual, res);
      if (res > tolerance_at(root)) {
        throw Error(ErrorKind::NoConvergence, "u",
                    "steady-state root not resolved, best residual " + format_double(res) + " rad/s");
      }
      out.all_roots.push_back(root);
    }
    prev_u = u;
    prev_f = f;
  }
  if (out.all_roots.empty()) {
    throw Error(ErrorKind::NoConvergence, "u",
                "no steady-state root bracketed on [0, " + format_double(u_max) + "]");
  }

  std::sort(out.all_roots.begin(), out.all_roots.end());
  out.u = out.all_roots.front();
  out.x_bar = out.u / p.g;
  out.residual = F(out.u);
  std::tie(out.a_cw, out.a_ccw) = intracavity_steady(p, d, out.u);
  return out;
}

}  // namespace esomit
