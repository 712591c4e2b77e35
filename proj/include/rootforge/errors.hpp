#pragma once

#include <stdexcept>
#include <string>

namespace rootforge {

// Malformed input or a violated precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element, root or iteration cap was exceeded.
class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation needed reflections outside the current window.
class WindowError : public ResourceCapError {
 public:
  using ResourceCapError::ResourceCapError;
};

inline constexpr double kTolerance = 1e-9;

}  // namespace rootforge
