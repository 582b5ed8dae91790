#pragma once

#include <string_view>

#include "esomit/model.hpp"

namespace esomit {

/// Eigenvalue branches E+- = omega+- - i kappa+- of the optical pair,
/// measured from the common complex resonance.
struct EigenSplit {
  double alpha = 0.0;
  double beta = 0.0;
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  double kappa_plus = 0.0;
  double kappa_minus = 0.0;

  double omega_splitting() const { return omega_plus - omega_minus; }
  double kappa_splitting() const { return kappa_plus - kappa_minus; }
};

struct AlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
};

/// alpha = sqrt(J^4 + 2 J^3 s sin(phi3) + J^2 s^2) / 2 and
/// beta = (J^2 + J s sin(phi3)) / 2 with s = t0 sqrt(gamma1 gamma2).
AlphaBeta alpha_beta(double J, double t0, double gamma1, double gamma2, Phase phi3);

EigenSplit eigen_split(double J, double t0, double gamma1, double gamma2, Phase phi3);
inline EigenSplit eigen_split(const SystemParams& p) {
  return eigen_split(p.J, p.t0, p.gamma1, p.gamma2, p.phi3);
}

/// Backscattering strength that puts the system on the second-kind surface.
inline double es_coupling(double t0, double gamma1, double gamma2) {
  return t0 * std::sqrt(gamma1 * gamma2);
}

inline constexpr Phase kEsPhase = Phase::pi_units(1.5);
inline constexpr double kDefaultClassTolerance = 1e-6;

enum class PhaseKind { EsKind1, EsKind2, KappaSplit, OmegaSplit, GenericNP };
std::string_view to_string(PhaseKind kind);

struct PhaseClass {
  PhaseKind kind = PhaseKind::GenericNP;
  double omega_splitting = 0.0;  // |omega+ - omega-|
  double kappa_splitting = 0.0;  // |kappa+ - kappa-|
};

/// First-kind surface: J within tol of zero. Second kind: J within tol of
/// t0 sqrt(gamma1 gamma2) and phi3 within tol (radians) of 1.5 pi. Otherwise
/// the point is labelled by which eigenvalue part carries the splitting.
PhaseClass classify_point(const SystemParams& p, double tol = kDefaultClassTolerance);

struct EsDistance {
  double second_kind = 0.0;  // |J - t0 sqrt(gamma1 gamma2)|
  double first_kind = 0.0;   // J
};

EsDistance distance_to_es(const SystemParams& p);

}  // namespace esomit
