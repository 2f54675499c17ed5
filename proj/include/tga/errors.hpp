#pragma once
#include <stdexcept>
#include <string>

namespace tga {

// Bad user input: malformed spec files, non-cocycles, unparsable literals.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical precondition failed: degenerate cocycle where a nondegenerate
// one is required, a certified invariant that did not hold on replay, etc.
struct math_error : std::runtime_error {
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

inline void check_input(bool ok, const std::string& what) {
  if (!ok) throw input_error(what);
}

inline void check_math(bool ok, const std::string& what) {
  if (!ok) throw math_error(what);
}

}  // namespace tga
