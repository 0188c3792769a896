#pragma once

#include <optional>

#include "coxlab/error.hpp"

template <typename Fn>
std::optional<coxlab::ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const coxlab::DomainError& e) {
    return e.kind();
  }
  return std::nullopt;
}
