#pragma once

#include <stdexcept>
#include <string>

namespace crn {

enum class ErrorKind {
  DimensionMismatch,
  UnsupportedDimension,
  Parse,
  InvalidNetwork,
  InvalidArgument,
  OrthantViolation,
  InvalidScalarPolynomial,
  MalformedField,
  TooLarge,
  Overflow,
  SingularJacobian,
  NoConvergence,
  StepUnderflow,
  Internal,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::UnsupportedDimension: return "unsupported dimension";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvalidNetwork: return "invalid network";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::OrthantViolation: return "orthant violation";
    case ErrorKind::InvalidScalarPolynomial: return "invalid scalar polynomial";
    case ErrorKind::MalformedField: return "malformed field";
    case ErrorKind::TooLarge: return "too large";
    case ErrorKind::Overflow: return "integer overflow";
    case ErrorKind::SingularJacobian: return "singular jacobian";
    case ErrorKind::NoConvergence: return "no convergence";
    case ErrorKind::StepUnderflow: return "step size underflow";
    case ErrorKind::Internal: return "internal error";
  }
  return "unknown";
}

}  // namespace crn
