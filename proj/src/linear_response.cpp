#include "esomit/linear_response.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "esomit/error.hpp"
#include "esomit/parallel.hpp"

namespace esomit {

namespace {

constexpr cdouble kI{0.0, 1.0};

double probe_amplitude(const Drive& d, double xi) {
  Drive probe = d;
  probe.omega_p = d.omega_c + xi;
  return drive_amplitudes(probe).Ep;
}

}  // namespace

FluctuationSystem fluctuation_system(const SystemParams& p, const SteadyState& ss, const Drive& d,
                                     double xi) {
  const DerivedRates r = derived_rates(p);
  const double root = geometric_coupling(p);
  const double detuning = pump_detuning(p, d) + p.J - ss.u;  // Delta - g x_bar
  const cdouble loop = r.t3 * root;
  const cdouble loop_c = std::conj(r.t3) * root;
  const double J = p.J;
  const double g = p.g;
  const cdouble a_cw = ss.a_cw;
  const cdouble a_ccw = ss.a_ccw;

  FluctuationSystem sys;
  sys.f1 = r.gamma_half - kI * xi + kI * detuning;
  sys.f2 = r.gamma_half - kI * xi - kI * detuning;
  sys.chi_inv = p.m * (p.omega_m * p.omega_m - xi * xi - kI * xi * p.gamma_m);
  sys.Ep = probe_amplitude(d, xi);

  const double force = kHbar * g;
  Matrix5c& A = sys.matrix;
  A.setZero();
  A(0, kDeltaX) = sys.chi_inv;
  A(0, kCwMinus) = -force * std::conj(a_cw);
  A(0, kCcwMinus) = -force * std::conj(a_ccw);
  A(0, kCwPlusConj) = -force * a_cw;
  A(0, kCcwPlusConj) = -force * a_ccw;

  A(1, kCwMinus) = sys.f1;
  A(1, kCcwMinus) = loop + kI * J;
  A(1, kDeltaX) = -kI * g * a_cw;

  A(2, kCcwMinus) = sys.f1;
  A(2, kCwMinus) = kI * J - loop;
  A(2, kDeltaX) = -kI * g * a_ccw;

  A(3, kCwPlusConj) = sys.f2;
  A(3, kCcwPlusConj) = loop_c - kI * J;
  A(3, kDeltaX) = kI * g * std::conj(a_cw);

  A(4, kCcwPlusConj) = sys.f2;
  A(4, kCwPlusConj) = -(loop_c + kI * J);
  A(4, kDeltaX) = kI * g * std::conj(a_ccw);

  sys.rhs.setZero();
  sys.rhs(1) = std::sqrt(p.gamma1) * sys.Ep;
  sys.rhs(2) = r.t2 * std::sqrt(p.gamma2) * sys.Ep;
  return sys;
}

ResponseSolution solve_response(const SystemParams& p, const SteadyState& ss, const Drive& d, double xi) {
  const FluctuationSystem sys = fluctuation_system(p, ss, d, xi);

  // delta_x is measured in units of 1/g (i.e. as a frequency shift) and the
  // mechanical row is normalised so its diagonal has magnitude gamma.
  const double col0 = p.g > 0.0 ? 1.0 / p.g : 1.0;
  const double row0 = p.gamma_half() / (std::abs(sys.chi_inv) * col0);
  Eigen::Matrix<double, 5, 1> dr = Eigen::Matrix<double, 5, 1>::Ones();
  Eigen::Matrix<double, 5, 1> dc = Eigen::Matrix<double, 5, 1>::Ones();
  dr(0) = row0;
  dc(0) = col0;

  const Matrix5c A = dr.asDiagonal() * sys.matrix * dc.asDiagonal();
  const Vector5c b = dr.cast<cdouble>().cwiseProduct(sys.rhs);

  Eigen::PartialPivLU<Matrix5c> lu(A);
  const double max_norm = A.cwiseAbs().maxCoeff();
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot > kPivotTolerance * max_norm)) {
    throw Error(ErrorKind::SingularSystem, "xi=" + format_double(xi),
                "fluctuation system singular at xi = " + format_double(xi) + " rad/s");
  }
  const Vector5c y = lu.solve(b);
  const double b_norm = b.norm();

  ResponseSolution out;
  out.delta_x = y(kDeltaX) * col0;
  out.da_cw_m = y(kCwMinus);
  out.da_ccw_m = y(kCcwMinus);
  out.da_cw_p = y(kCwPlusConj);
  out.da_ccw_p = y(kCcwPlusConj);
  out.f1 = sys.f1;
  out.f2 = sys.f2;
  out.chi_inv = sys.chi_inv;
  out.Ep = sys.Ep;
  out.xi = xi;
  out.relative_residual = b_norm > 0.0 ? (A * y - b).norm() / b_norm : (A * y).norm();
  return out;
}

cdouble transmission(const SystemParams& p, const ResponseSolution& r) {
  if (r.Ep == 0.0) {
    throw Error(ErrorKind::ZeroProbe, "Pp", "transmission undefined for zero probe amplitude");
  }
  const DerivedRates rates = derived_rates(p);
  return rates.t2 -
         (rates.t3 * std::sqrt(p.gamma1) * r.da_cw_m + std::sqrt(p.gamma2) * r.da_ccw_m) / r.Ep;
}

cdouble transmission_at(const SystemParams& p, const SteadyState& ss, const Drive& d, double delta_p) {
  const double xi = delta_p + pump_detuning(p, d);
  return transmission(p, solve_response(p, ss, d, xi));
}

GroupDelay phase_slope(const std::function<cdouble(double)>& f, double x, double h,
                       const DelayOptions& opts) {
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidValue, "h", "finite-difference step must be > 0");
  auto central = [&](double step) {
    double diff = std::arg(f(x + step)) - std::arg(f(x - step));
    if (diff > std::numbers::pi) diff -= 2.0 * std::numbers::pi;
    if (diff < -std::numbers::pi) diff += 2.0 * std::numbers::pi;
    return diff / (2.0 * step);
  };
  double previous = central(h);
  double step = h;
  for (int k = 1; k <= opts.max_halvings; ++k) {
    step *= 0.5;
    const double current = central(step);
    const double gap = std::abs(current - previous);
    if (gap <= opts.relative_agreement * std::max(std::abs(current), std::abs(previous)) +
                   opts.absolute_floor) {
      return {current, step, k - 1};
    }
    previous = current;
  }
  throw Error(ErrorKind::NonConvergentDerivative, "x=" + format_double(x),
              "phase derivative did not settle after " + std::to_string(opts.max_halvings) +
                  " halvings at x = " + format_double(x));
}

GroupDelay group_delay(const SystemParams& p, const SteadyState& ss, const Drive& d, double delta_p,
                       double h, const DelayOptions& opts) {
  return phase_slope([&](double dp) { return transmission_at(p, ss, d, dp); }, delta_p, h, opts);
}

GroupDelay group_delay(const SystemParams& p, const Drive& d, double delta_p, double h) {
  const SteadyState ss = solve_steady(p, d);
  return group_delay(p, ss, d, delta_p, h);
}

std::vector<double> Grid::values() const {
  if (count == 0) throw Error(ErrorKind::InvalidGrid, "count", "grid must have at least one point");
  if (count == 1) return {min};
  if (!(max > min)) throw Error(ErrorKind::InvalidGrid, "max", "grid max must exceed min");
  std::vector<double> v(count);
  const double span = max - min;
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = min + span * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  v.back() = max;
  return v;
}

void require_increasing(const std::vector<double>& grid) {
  if (grid.empty()) throw Error(ErrorKind::InvalidGrid, "grid", "grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw Error(ErrorKind::InvalidGrid, "grid",
                  "grid not strictly increasing at index " + std::to_string(i));
    }
  }
}

SpectrumTable transmission_spectrum(const SystemParams& p, const Drive& d,
                                    const std::vector<double>& delta_p, const std::string& preset,
                                    FrequencyConvention convention) {
  require_increasing(delta_p);
  SpectrumTable table;
  table.meta.preset = preset;
  table.meta.params = p;
  table.meta.drive = d;
  table.meta.convention = convention;
  table.meta.pump_detuning = pump_detuning(p, d);
  table.meta.steady = solve_steady(p, d);
  table.rows.resize(delta_p.size());

  const SteadyState& ss = table.meta.steady;
  const double h = default_delay_step(p);
  parallel_for(delta_p.size(), [&](std::size_t i) {
    try {
      SpectrumRow& row = table.rows[i];
      row.delta_p = delta_p[i];
      row.t = transmission_at(p, ss, d, delta_p[i]);
      row.T = std::norm(row.t);
      row.tau_g = group_delay(p, ss, d, delta_p[i], h).value;
    } catch (const Error& e) {
      throw Error(e.kind(), "row " + std::to_string(i), "row " + std::to_string(i) + ": " + e.what());
    }
  });
  return table;
}

}  // namespace esomit
