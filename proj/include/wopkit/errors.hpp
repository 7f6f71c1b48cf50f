#pragma once

#include <stdexcept>
#include <string>

namespace wopkit {

// Bad call arguments: invalid pairs, malformed move specs, wrong fixed-index
// arity, unsupported class tags.
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally malformed domain values: bucket lists that do not partition
// [n], unrealizable rank vectors, bit vectors that are not weak orders.
struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because it would exceed the configured enumeration guard.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wopkit
