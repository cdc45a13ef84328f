#pragma once

#include <stdexcept>
#include <string>

namespace tropconic {

/* Invalid input: malformed text, out-of-domain values, trees that are not
 * conics. Maps to exit code 1 in the command line tool. */
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/* A broken internal invariant. Reaching this is a bug, never the caller's
 * fault. Maps to exit code 2 in the command line tool. */
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tropconic
