#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxlab {

enum class ErrorKind {
  UnsupportedSpec,
  UnsupportedFamily,
  MixedGroups,
  TooLarge,
  NotPermutation,
  InvalidPair,
  NotAClass,
  NotPrime,
  DimensionMismatch,
  NotSymplectic,
  SplittingFieldTooLarge,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Raised for violated preconditions on mathematical inputs. The CLI maps
/// these to exit status 2; anything else escaping is a bug.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw DomainError(kind, message);
}

}  // namespace coxlab
