#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad cycle strings, bad grammar, contract violations.
struct input_error : error {
  using error::error;
};

// A computation was refused because a configured bound would be exceeded
// (section materialization, oracle order limit, backtrack budget).
struct bound_error : error {
  using error::error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct invariant_error : error {
  using error::error;
};

inline void require_input(bool ok, const std::string& msg) {
  if (!ok) throw input_error(msg);
}

inline void check_invariant(bool ok, const std::string& msg) {
  if (!ok) throw invariant_error(msg);
}

}  // namespace cgt
