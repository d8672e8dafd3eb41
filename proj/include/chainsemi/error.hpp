#pragma once

#include <stdexcept>
#include <string>

namespace chainsemi {

/// Raised when a computation would exceed a configured brute-force or
/// memory cap. Predictable failure instead of memory exhaustion.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal structural invariant fails (duplicate family
/// element, missing degree candidate, ...). These indicate a construction
/// bug or an input outside the theory and are reported, never guessed over.
class inconsistency_error : public std::logic_error {
 public:
  explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace chainsemi
