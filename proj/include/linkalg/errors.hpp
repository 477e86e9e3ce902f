#pragma once

#include <stdexcept>
#include <string>

namespace linkalg {

/// Malformed input: bad polynomial text, unknown variable, unresolved session name.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A call whose mathematical preconditions do not hold (improper ideal, ring mismatch, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation exceeded its configured budget (S-pairs, soft timeout).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace linkalg
