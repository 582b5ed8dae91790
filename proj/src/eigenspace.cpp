#include "esomit/eigenspace.hpp"

#include <algorithm>
#include <cmath>

namespace esomit {

namespace {

// alpha +- beta = J (h +- d) / 2 with d = J + s sin, c = s cos, h = hypot(d, c).
// The smaller of h +- d is formed as c^2 / (larger) to avoid cancellation.
struct SplitTerms {
  double sum;   // alpha + beta
  double diff;  // alpha - beta
  double alpha;
  double beta;
};

SplitTerms split_terms(double J, double t0, double gamma1, double gamma2, Phase phi3) {
  const double s = es_coupling(t0, gamma1, gamma2);
  const double d = J + s * phi3.sin();
  const double c = s * phi3.cos();
  const double h = std::hypot(d, c);
  double h_plus = 0.0;
  double h_minus = 0.0;
  if (d >= 0.0) {
    h_plus = h + d;
    h_minus = h_plus > 0.0 ? c * c / h_plus : 0.0;
  } else {
    h_minus = h - d;
    h_plus = c * c / h_minus;
  }
  return {0.5 * J * h_plus, 0.5 * J * h_minus, 0.5 * J * h, 0.5 * J * d};
}

}  // namespace

AlphaBeta alpha_beta(double J, double t0, double gamma1, double gamma2, Phase phi3) {
  const auto t = split_terms(J, t0, gamma1, gamma2, phi3);
  return {t.alpha, t.beta};
}

EigenSplit eigen_split(double J, double t0, double gamma1, double gamma2, Phase phi3) {
  const auto t = split_terms(J, t0, gamma1, gamma2, phi3);
  EigenSplit e;
  e.alpha = t.alpha;
  e.beta = t.beta;
  const double w = std::sqrt(std::max(t.sum, 0.0));
  const double k = std::sqrt(std::max(t.diff, 0.0));
  e.omega_plus = w;
  e.omega_minus = -w;
  e.kappa_plus = k;
  e.kappa_minus = -k;
  return e;
}

std::string_view to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::EsKind1: return "ES-Kind1";
    case PhaseKind::EsKind2: return "ES-Kind2";
    case PhaseKind::KappaSplit: return "Kappa-Split";
    case PhaseKind::OmegaSplit: return "Omega-Split";
    case PhaseKind::GenericNP: return "Generic-NP";
  }
  return "Generic-NP";
}

PhaseClass classify_point(const SystemParams& p, double tol) {
  const EigenSplit e = eigen_split(p);
  PhaseClass out;
  out.omega_splitting = std::abs(e.omega_splitting());
  out.kappa_splitting = std::abs(e.kappa_splitting());

  const double j_star = es_coupling(p.t0, p.gamma1, p.gamma2);
  const double scale = std::max(p.J, j_star);
  const double threshold = tol * scale;
  const double phase_offset = std::abs(p.phi3.in_radians() - kEsPhase.in_radians());

  if (p.J <= threshold) {
    out.kind = PhaseKind::EsKind1;
  } else if (std::abs(p.J - j_star) <= threshold && phase_offset <= tol) {
    out.kind = PhaseKind::EsKind2;
  } else if (out.omega_splitting < threshold && threshold < out.kappa_splitting) {
    out.kind = PhaseKind::KappaSplit;
  } else if (out.kappa_splitting < threshold && threshold < out.omega_splitting) {
    out.kind = PhaseKind::OmegaSplit;
  } else {
    out.kind = PhaseKind::GenericNP;
  }
  return out;
}

EsDistance distance_to_es(const SystemParams& p) {
  return {std::abs(p.J - es_coupling(p.t0, p.gamma1, p.gamma2)), p.J};
}

}  // namespace esomit
