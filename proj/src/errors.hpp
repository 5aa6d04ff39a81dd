#pragma once

#include <stdexcept>
#include <string>

namespace twk {

// Bad user input: malformed JSON, violated preconditions, out-of-range flags.
// Maps to status/exit code 2.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// A cross-checked identity failed inside the library. Maps to status/exit
// code 3 and should never fire on valid builds.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twk
