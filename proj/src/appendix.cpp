#include "esomit/appendix.hpp"

#include <algorithm>
#include <cmath>

#include "esomit/error.hpp"

namespace esomit {

namespace {

constexpr cdouble kI{0.0, 1.0};
constexpr double kZeroB = 1e-14;
constexpr std::size_t kWorstRows = 10;

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double m = v[mid];
  if (v.size() % 2 == 0) {
    m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
  }
  return m;
}

double relative_gap(cdouble direct, cdouble other) {
  const double gap = std::abs(direct - other);
  if (gap == 0.0) return 0.0;
  const double scale = std::max(std::abs(direct), std::abs(other));
  return gap / scale;
}

}  // namespace

AppendixCoefficients appendix_coefficients(const SystemParams& p, const SteadyState& ss, const Drive& d,
                                           double xi) {
  const DerivedRates r = derived_rates(p);
  const double detuning = pump_detuning(p, d) + p.J - ss.u;
  const cdouble f1 = r.gamma_half - kI * xi + kI * detuning;
  const cdouble f2 = r.gamma_half - kI * xi - kI * detuning;
  const cdouble chi = 1.0 / (p.m * (p.omega_m * p.omega_m - xi * xi - kI * xi * p.gamma_m));

  const double g1 = p.gamma1;
  const double g2 = p.gamma2;
  const double gg = g1 * g2;
  const double sq = std::sqrt(gg);
  const double t0 = p.t0;
  const cdouble t3 = r.t3;
  const cdouble t3c = std::conj(t3);
  const cdouble J = p.J;
  const cdouble Jc = std::conj(J);
  const double pull = kHbar * p.g * p.g;  // hbar g^2

  AppendixCoefficients c;
  c.h1 = pull * chi * ss.a_cw * std::conj(ss.a_cw);
  c.h2 = pull * chi * ss.a_ccw * std::conj(ss.a_ccw);
  c.h3 = pull * chi * ss.a_cw * std::conj(ss.a_ccw);
  c.h4 = pull * chi * ss.a_ccw * std::conj(ss.a_cw);
  c.h5 = J + kI * t3 * sq;
  c.h6 = J - kI * t3 * sq;
  c.h7 = f2 * f2 + Jc * Jc + gg * t3c * t3c;
  c.k1 = f1 - kI * c.h1;
  c.k2 = J * J + f1 * f1;

  const cdouble h12 = pair_h(1, 2, c);
  const cdouble h34 = pair_h(3, 4, c);
  const cdouble h43 = pair_h(4, 3, c);
  const cdouble h53 = pair_h(5, 3, c);

  c.d1 = -t3 * t3c * t3c * std::pow(gg, 1.5) + f2 * c.h5 * h12 +
         sq * (t3 * Jc * (h34 - Jc) + t3c * J * h43) -
         kI * (f2 * f2 * h53 + t3c * gg * ((J - c.h3) * t3c + t3 * h43) -
               Jc * (J * h34 + Jc * c.h3 - J * J));
  c.d2 = f1 * (c.h7 + kI * (t3c * sq * c.h4 + f2 * h12) - c.h3 * std::conj(c.h5) - c.h4 * Jc);

  const double s1 = std::sqrt(g1);
  const double s2 = std::sqrt(g2);
  const double re_t2 = r.t2.real();
  const double im_t2 = r.t2.imag();
  c.A1 = c.d1 * s2 * re_t2 + s1 * (c.d2 - kI * c.h2 * c.h7);
  c.A2 = c.d1 * s2 * im_t2;
  c.A3 = s1 * c.h7 * (c.k1 * re_t2 + kI * c.h4) - kI * s1 * c.h6 * c.d2 / f1 +
         f1 * s2 * (kI * f2 * h12 + kI * c.h3 * std::conj(c.h6) - c.h4 * std::conj(c.h6)) * re_t2;
  c.A4 = s2 * (c.d2 - kI * c.h1 * c.h7) * im_t2;

  const cdouble terms[] = {
      std::pow(t0, 4) * g1 * g1 * g2 * g2,
      kI * sq * h43 * (t3c * c.k2 + t3 * Jc * Jc),
      gg * kI * t0 * t0 * sq * (t3 + t3c) * h43,
      -gg * (J * t3c * t3c + Jc * t3 * t3) * h34,
      gg * t3c * t3c * c.k2,
      gg * t3 * t3 * Jc * Jc,
      -gg * kI * t3c * t3c * f1 * h12,
      Jc * (c.k2 * Jc),
      -Jc * kI * f1 * Jc * h12,
      -Jc * (c.k2 + J * Jc) * h34,
  };
  c.B = 0.0;
  c.B_scale = 0.0;
  for (const cdouble& t : terms) {
    c.B += t;
    c.B_scale += std::abs(t);
  }
  return c;
}

std::pair<cdouble, cdouble> appendix_response(const SystemParams& p, const SteadyState& ss,
                                              const Drive& d, double xi) {
  const AppendixCoefficients c = appendix_coefficients(p, ss, d, xi);
  if (!(std::abs(c.B) >= kZeroB * c.B_scale) || c.B_scale == 0.0) {
    throw Error(ErrorKind::ZeroB, "xi=" + format_double(xi),
                "closed-form denominator B vanishes at xi = " + format_double(xi));
  }
  Drive probe = d;
  probe.omega_p = d.omega_c + xi;
  const double Ep = drive_amplitudes(probe).Ep;
  return {Ep * (c.A1 + kI * c.A2) / c.B, Ep * (c.A3 + kI * c.A4) / c.B};
}

CrosscheckReport crosscheck_appendix(const SystemParams& p, const Drive& d,
                                     const std::vector<double>& delta_p, const std::string& preset) {
  if (delta_p.empty()) throw Error(ErrorKind::InvalidGrid, "grid", "cross-check grid is empty");
  CrosscheckReport report;
  report.preset = preset;
  report.grid_points = delta_p.size();
  report.threshold = kCrosscheckThreshold;
  report.cw.name = "da_cw_minus";
  report.ccw.name = "da_ccw_minus";

  const SteadyState ss = solve_steady(p, d);
  const double pump = pump_detuning(p, d);
  std::vector<double> dev_cw;
  std::vector<double> dev_ccw;
  std::vector<DiscrepancyRow> rows;
  for (double dp : delta_p) {
    const double xi = dp + pump;
    const ResponseSolution direct = solve_response(p, ss, d, xi);
    std::pair<cdouble, cdouble> closed;
    try {
      closed = appendix_response(p, ss, d, xi);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ZeroB) throw;
      ++report.zero_b_rows;
      continue;
    }
    const double e_cw = relative_gap(direct.da_cw_m, closed.first);
    const double e_ccw = relative_gap(direct.da_ccw_m, closed.second);
    if (e_cw >= report.cw.max_rel) {
      report.cw.max_rel = e_cw;
      report.cw.worst_delta_p = dp;
    }
    if (e_ccw >= report.ccw.max_rel) {
      report.ccw.max_rel = e_ccw;
      report.ccw.worst_delta_p = dp;
    }
    dev_cw.push_back(e_cw);
    dev_ccw.push_back(e_ccw);
    rows.push_back({dp, report.cw.name, direct.da_cw_m, closed.first, e_cw});
    rows.push_back({dp, report.ccw.name, direct.da_ccw_m, closed.second, e_ccw});
  }
  report.cw.median_rel = median(dev_cw);
  report.ccw.median_rel = median(dev_ccw);
  report.pass = report.zero_b_rows == 0 && report.cw.max_rel <= report.threshold &&
                report.ccw.max_rel <= report.threshold;

  if (!report.pass) {
    std::sort(rows.begin(), rows.end(),
              [](const DiscrepancyRow& a, const DiscrepancyRow& b) { return a.rel_dev > b.rel_dev; });
    rows.resize(std::min(rows.size(), kWorstRows));
    report.worst_rows = std::move(rows);
    report.notes = {
        "direct solve of the sideband equations re-derived from the equations of motion is authoritative",
        "published sideband equations write the loop coupling as t3*sqrt(gamma2); equations of motion use "
        "t3*sqrt(gamma1*gamma2)",
        "published third sideband equation couples da_cw^+* to itself; derivation couples it to da_ccw^+*",
        "published fifth sideband equation uses conj(a_cw); derivation uses conj(a_ccw)",
    };
    if (report.zero_b_rows > 0) {
      report.notes.push_back(std::to_string(report.zero_b_rows) +
                             " grid rows skipped: closed-form denominator B vanished");
    }
  }
  return report;
}

}  // namespace esomit
