#pragma once

#include <stdexcept>
#include <string>

namespace ncsf {

// Raised when arguments are well-formed but outside an operation's domain
// (size mismatch, inhomogeneous input to a matrix route, wrong basis family).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by the text parsers.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ncsf
