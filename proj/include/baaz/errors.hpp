#pragma once

#include <stdexcept>
#include <string>

namespace baaz {

// Construction or axiom failure in a structure; carries a witness in the
// message where one exists.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax or name-resolution failure in a text input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Term applied outside its setting, or an operator applied to a value
// outside its domain (complement of a non-singleton, delta of an empty set).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace baaz
