#pragma once

#include <stdexcept>

namespace heitmann {

/// A mathematical hypothesis failed, or no certificate exists.
class MathRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation exceeded its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: parse failures, unknown variables, shape mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heitmann
