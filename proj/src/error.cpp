#include "esomit/error.hpp"

namespace esomit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingField: return "MissingField";
    case ErrorKind::NegativeRate: return "NegativeRate";
    case ErrorKind::T0OutOfRange: return "T0OutOfRange";
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::UnknownUnit: return "UnknownUnit";
    case ErrorKind::NonPositiveFrequency: return "NonPositiveFrequency";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::ZeroB: return "ZeroB";
    case ErrorKind::ZeroProbe: return "ZeroProbe";
    case ErrorKind::NonConvergentDerivative: return "NonConvergentDerivative";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::NoExtremum: return "NoExtremum";
    case ErrorKind::ZeroModeVolume: return "ZeroModeVolume";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
  }
  return "Unknown";
}

}  // namespace esomit
