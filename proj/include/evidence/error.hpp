#ifndef EVIDENCE_ERROR_HPP
#define EVIDENCE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace evidence {

// Base for every error raised by the library. The subclasses map one-to-one
// onto the CLI exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input values: unknown labels, bounds and sum violations, frame mismatch.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed documents or expressions.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A combination rule was asked to handle masses it is not defined for.
class RuleGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace evidence

#endif  // EVIDENCE_ERROR_HPP
