#pragma once

#include <stdexcept>
#include <string>

namespace charnum {

/// A requested count is not zero-dimensional (positive expected dimension).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

}  // namespace charnum
