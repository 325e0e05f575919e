#pragma once

#include <stdexcept>
#include <string>

namespace simclass {

enum class ErrorKind {
  DivisionByZero,
  NotIntegral,
  CharTwo,
  InvalidRing,
  InvalidParams,
  NotIrreducible,
  InsepBoundRequired,
  CharPolyMismatch,
  NotSeparable,
  NotAnIdeal,
  NotImaginaryQuadratic,
  IndefiniteForm,
  UnsupportedRing,
  NotFullRank,
  X0InBase,
  NotFreeError,
  BudgetExceeded,
  ParseError,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace simclass
