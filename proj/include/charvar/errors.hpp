#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

// Operands live over different variable lists.
class AlignmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside what an operation supports (Laurent exponents, wrong arity, ...).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// gcd(0, 0), resultant of two constants, and similar.
class UndefinedOperation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A computed object violated a postcondition that should hold by construction.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative numerical method failed to converge at the highest precision tried.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace charvar
