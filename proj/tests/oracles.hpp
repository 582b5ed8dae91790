#pragma once

// Reference computations written directly from the equations of motion. They
// share no code with the library beyond the parameter structs.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "esomit/model.hpp"

namespace oracle {

using cd = std::complex<double>;
using esomit::Drive;
using esomit::SystemParams;

constexpr double hbar = 1.054571817e-34;

inline double half_width(const SystemParams& p) { return (p.gamma0 + p.gamma1 + p.gamma2) / 2.0; }

inline cd tj(const SystemParams& p, const esomit::Phase& phi) {
  return std::polar(p.t0, phi.in_radians());
}

inline cd loop(const SystemParams& p) {
  if (!p.loop_coupling) return 0.0;
  return tj(p, p.phi3) * std::sqrt(p.gamma1 * p.gamma2);
}

inline double pump_amplitude(const Drive& d) { return std::sqrt(d.Pc / (hbar * d.omega_c)); }
inline double probe_amplitude(const Drive& d) { return std::sqrt(d.Pp / (hbar * d.omega_p)); }

inline double pump_det(const SystemParams& p, const Drive& d) { return p.omega0 - d.omega_c; }

// Mean fields for a fixed shift u: zero time derivatives in the two optical
// equations, solved by Cramer's rule.
inline std::array<cd, 2> mean_fields(const SystemParams& p, const Drive& d, double u) {
  const double Delta = pump_det(p, d) + p.J;
  const cd D = cd(half_width(p), Delta - u);
  const cd L = loop(p);
  const cd k11 = D, k12 = cd(0, p.J) + L, k21 = cd(0, p.J) - L, k22 = D;
  const double Ec = pump_amplitude(d);
  const cd b1 = Ec * std::sqrt(p.gamma1);
  const cd b2 = Ec * tj(p, p.phi1) * std::sqrt(p.gamma2);
  const cd det = k11 * k22 - k12 * k21;
  return {(b1 * k22 - k12 * b2) / det, (k11 * b2 - k21 * b1) / det};
}

inline double fixed_point(const SystemParams& p, const Drive& d, double u) {
  const auto a = mean_fields(p, d, u);
  return u - hbar * p.g * p.g / (p.m * p.omega_m * p.omega_m) * (std::norm(a[0]) + std::norm(a[1]));
}

// Sign changes of F on n uniform points over [0, u_max], each refined by
// plain bisection.
inline std::vector<double> dense_roots(const SystemParams& p, const Drive& d, double u_max, std::size_t n) {
  std::vector<double> roots;
  double prev_u = 0.0, prev_f = fixed_point(p, d, 0.0);
  if (prev_f == 0.0) roots.push_back(0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double u = u_max * static_cast<double>(i) / static_cast<double>(n);
    const double f = fixed_point(p, d, u);
    if (f == 0.0) {
      roots.push_back(u);
    } else if ((prev_f < 0.0) != (f < 0.0) && prev_f != 0.0) {
      double lo = prev_u, hi = u, flo = prev_f;
      for (int k = 0; k < 200 && hi - lo > 1e-15 * hi; ++k) {
        const double mid = 0.5 * (lo + hi);
        const double fm = fixed_point(p, d, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_u = u;
    prev_f = f;
  }
  return roots;
}

// Real state (Re a_cw, Im a_cw, Re a_ccw, Im a_ccw, u, v) with u = g x and
// v = du/dt, in the frame rotating at the pump.
using State = Eigen::Matrix<double, 6, 1>;

inline State langevin(const SystemParams& p, const Drive& d, const State& z) {
  const cd a1(z[0], z[1]), a2(z[2], z[3]);
  const double u = z[4], v = z[5];
  const double Delta = pump_det(p, d) + p.J;
  const cd L = loop(p);
  const double Ec = pump_amplitude(d);
  const cd rot = cd(half_width(p), Delta - u);
  const cd da1 = -rot * a1 - (cd(0, p.J) + L) * a2 + std::sqrt(p.gamma1) * Ec;
  const cd da2 = -rot * a2 - (cd(0, p.J) - L) * a1 + std::sqrt(p.gamma2) * tj(p, p.phi1) * Ec;
  const double force = hbar * p.g * p.g / p.m * (std::norm(a1) + std::norm(a2));
  State out;
  out << da1.real(), da1.imag(), da2.real(), da2.imag(), v,
      -p.omega_m * p.omega_m * u - p.gamma_m * v + force;
  return out;
}

// Central differences; exact up to rounding because the flow is quadratic.
inline Eigen::Matrix<double, 6, 6> jacobian(const SystemParams& p, const Drive& d, const State& z) {
  Eigen::Matrix<double, 6, 6> jac;
  for (int k = 0; k < 6; ++k) {
    double h = 1e-3 * std::abs(z[k]);
    if (k < 4) h = std::max(h, 1e-3 * std::hypot(z[0], z[1]) + 1e-3);
    if (k == 4) h = std::max(h, 1e-3 * half_width(p));
    if (k == 5) h = std::max(h, 1e-3 * half_width(p) * p.omega_m);
    State zp = z, zm = z;
    zp[k] += h;
    zm[k] -= h;
    jac.col(k) = (langevin(p, d, zp) - langevin(p, d, zm)) / (2.0 * h);
  }
  return jac;
}

inline State steady_state_vector(const SystemParams& p, const Drive& d, double u) {
  const auto a = mean_fields(p, d, u);
  State z;
  z << a[0].real(), a[0].imag(), a[1].real(), a[1].imag(), u, 0.0;
  return z;
}

struct Sidebands {
  cd dx;  // m
  cd cw;
  cd ccw;
};

// First-order response to the probe at offset xi: the e^{-i xi t}
// component of the linearized flow, solved as a 6x6 complex system.
inline Sidebands linear_response(const SystemParams& p, const Drive& d, double u, double xi) {
  const State z = steady_state_vector(p, d, u);
  const Eigen::Matrix<double, 6, 6> jac = jacobian(p, d, z);
  const double Ep = probe_amplitude(d);
  const cd c1 = std::sqrt(p.gamma1) * Ep;
  const cd c2 = std::sqrt(p.gamma2) * tj(p, p.phi2) * Ep;
  Eigen::Matrix<cd, 6, 1> force;
  force << c1 / 2.0, c1 / cd(0, 2), c2 / 2.0, c2 / cd(0, 2), 0.0, 0.0;
  Eigen::Matrix<cd, 6, 6> m = -jac.cast<cd>();
  for (int k = 0; k < 6; ++k) m(k, k) += cd(0, -xi);
  // The mechanical rows are ~1e16 larger than the optical ones; balance
  // rows and columns before the solve.
  Eigen::Matrix<double, 6, 1> dr = Eigen::Matrix<double, 6, 1>::Ones(), dc = dr;
  for (int pass = 0; pass < 4; ++pass) {
    for (int k = 0; k < 6; ++k) dr[k] /= (dr.asDiagonal() * m * dc.asDiagonal()).row(k).cwiseAbs().maxCoeff();
    for (int k = 0; k < 6; ++k) dc[k] /= (dr.asDiagonal() * m * dc.asDiagonal()).col(k).cwiseAbs().maxCoeff();
  }
  const Eigen::Matrix<cd, 6, 6> balanced = dr.asDiagonal() * m * dc.asDiagonal();
  const Eigen::Matrix<cd, 6, 1> y = balanced.fullPivLu().solve((dr.cast<cd>().asDiagonal() * force).eval());
  const Eigen::Matrix<cd, 6, 1> sol = dc.cast<cd>().asDiagonal() * y;
  return {sol[4] / p.g, sol[0] + cd(0, 1) * sol[1], sol[2] + cd(0, 1) * sol[3]};
}

inline cd port2(const SystemParams& p, const Drive& d, const Sidebands& s) {
  const double Ep = probe_amplitude(d);
  return tj(p, p.phi2) - (loop(p) / std::sqrt(p.gamma2) * s.cw + std::sqrt(p.gamma2) * s.ccw) / Ep;
}

// Two-mode response with the mechanics removed.
inline std::array<cd, 2> optical_only(const SystemParams& p, const Drive& d, double xi) {
  const double Delta = pump_det(p, d) + p.J;
  const cd f1 = cd(half_width(p), Delta - xi);
  const cd L = loop(p);
  const double Ep = probe_amplitude(d);
  const cd b1 = std::sqrt(p.gamma1) * Ep, b2 = std::sqrt(p.gamma2) * tj(p, p.phi2) * Ep;
  const cd k12 = cd(0, p.J) + L, k21 = cd(0, p.J) - L;
  const cd det = f1 * f1 - k12 * k21;
  return {(b1 * f1 - k12 * b2) / det, (f1 * b2 - k21 * b1) / det};
}

// Hand-rolled generator of valid parameter sets around the device values.
struct ParamGen {
  std::mt19937_64 rng;
  explicit ParamGen(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

  SystemParams operator()() {
    SystemParams p;
    p.omega0 = uniform(1e14, 3e14);
    p.gamma0 = uniform(0.1e6, 3e6);
    p.gamma1 = uniform(0.1e6, 3e6);
    p.gamma2 = uniform(0.1e6, 3e6);
    p.J = uniform(0.0, 3e6);
    p.t0 = uniform(0.0, 1.0);
    p.phi1 = esomit::Phase::pi_units(uniform(0.0, 2.0));
    p.phi2 = esomit::Phase::pi_units(uniform(0.0, 2.0));
    p.phi3 = esomit::Phase::pi_units(uniform(0.0, 2.0));
    p.R = uniform(10e-6, 100e-6);
    p.m = uniform(1e-12, 1e-10);
    p.omega_m = uniform(50e6, 300e6);
    p.gamma_m = uniform(0.05e6, 1e6);
    return esomit::validate(p);
  }
};

inline double rel(cd a, cd b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace oracle
