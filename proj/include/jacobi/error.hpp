#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacobi {

enum class ErrorCode {
  ZeroDegree,
  ZeroPolynomial,
  NotExactDivision,
  DuplicateAbscissa,
  InsufficientSamples,
  InsufficientDegreeBound,
  DegenerateElimination,
  ParseError,
  InvalidPerversity,
  FiltrationNotClosed,
  DimensionViolation,
  DanglingSimplex,
  InvalidComplex,
  NonMatchingArcLengths,
  InvalidGluing,
  UnknownModel,
};

std::string_view to_string(ErrorCode code);

// Single exception type for every computational failure in the library.
// The code identifies the failure class; `index` carries an optional
// position (the violated perversity entry, the offending sample, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, long index = -1)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  long index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

}  // namespace jacobi
