#pragma once

#include <stdexcept>

namespace egt {

// Input that breaks an operation's contract (loop edge, mismatched sizes,
// non-regular graph where regularity is required, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Work that would exceed a configured cap (group order, exhaustive search
// size, dense eigensolver limit, ...).  Never downgraded to a heuristic
// silently; callers pick the heuristic entry point themselves.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace egt
