#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace esomit {

enum class ErrorKind {
  MissingField,
  NegativeRate,
  T0OutOfRange,
  InvalidValue,
  UnknownUnit,
  NonPositiveFrequency,
  SingularDenominator,
  NoConvergence,
  SingularSystem,
  ZeroB,
  ZeroProbe,
  NonConvergentDerivative,
  UnknownPreset,
  NoExtremum,
  ZeroModeVolume,
  InvalidGrid,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type. `subject()` carries the
/// offending field name, preset name, or grid coordinate when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string subject, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        subject_(std::move(subject)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorKind kind_;
  std::string subject_;
};

}  // namespace esomit
