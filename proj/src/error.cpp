#include "coxlab/error.hpp"

namespace coxlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::MixedGroups: return "MixedGroups";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::NotAClass: return "NotAClass";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::SplittingFieldTooLarge: return "SplittingFieldTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace coxlab
