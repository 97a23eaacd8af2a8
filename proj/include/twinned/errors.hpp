#pragma once

#include <stdexcept>
#include <string>

namespace twinned {

/// Malformed user input: bad poset text, mismatched sizes, invalid rankings.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A computed object failed one of its own consistency checks.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twinned
