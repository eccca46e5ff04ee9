#pragma once

#include <stdexcept>
#include <string>

namespace gncg {

// Input that cannot be interpreted: bad table files, malformed JSON, bad flags.
class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

// A computation was refused because its input exceeds a size bound.
class CostGuardError : public std::runtime_error {
 public:
  explicit CostGuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gncg
