#pragma once

#include <stdexcept>
#include <string>

namespace ueq {

enum class ErrorKind {
  Overlap,
  Coverage,
  Index,
  CarrierMismatch,
  EmptyGeneratorSet,
  EmptyFamily,
  EmptySubset,
  TooManyFactors,
  CharacterizationMismatch,
  NotLeftInverse,
  NotContinuous,
  NotAPseudoMetric,
  NotTransitive,
  NonPositiveAlpha,
  Schema,
  Validation,
  UnknownCheckId,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overlap: return "OverlapError";
    case ErrorKind::Coverage: return "CoverageError";
    case ErrorKind::Index: return "IndexError";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::TooManyFactors: return "TooManyFactors";
    case ErrorKind::CharacterizationMismatch: return "CharacterizationMismatch";
    case ErrorKind::NotLeftInverse: return "NotLeftInverse";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::NotAPseudoMetric: return "NotAPseudoMetric";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::NonPositiveAlpha: return "NonPositiveAlpha";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::UnknownCheckId: return "UnknownCheckId";
  }
  return "Error";
}

/// Library-wide exception; every throwing operation reports one of the
/// kinds above plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool ok, ErrorKind kind, const std::string& message) {
  if (!ok) fail(kind, message);
}

}  // namespace ueq
