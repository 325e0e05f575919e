#include "simclass/error.hpp"

namespace simclass {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::InsepBoundRequired: return "InsepBoundRequired";
    case ErrorKind::CharPolyMismatch: return "CharPolyMismatch";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotImaginaryQuadratic: return "NotImaginaryQuadratic";
    case ErrorKind::IndefiniteForm: return "IndefiniteForm";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::X0InBase: return "X0InBase";
    case ErrorKind::NotFreeError: return "NotFreeError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

}  // namespace simclass
