#pragma once

#include <stdexcept>
#include <string>

namespace weylnorm {

/// Invalid user-level input: unknown type, bad rank, unsupported representation.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite enumeration or search exceeded its configured size bound.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that construction relies on did not hold. Always an
/// implementation bug, never a property of the input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace weylnorm
