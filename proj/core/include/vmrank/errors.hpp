#pragma once

#include <stdexcept>
#include <string>

namespace vmrank {

// Malformed input or a violated precondition (arity mismatch, bad index, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size limit was exceeded: degree above a model's table,
// frontier too wide, catalog bounds too large, permutation degree too high.
class GuardViolation : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace vmrank
