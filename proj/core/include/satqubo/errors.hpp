#pragma once

#include <stdexcept>
#include <string>

namespace satqubo {

// Error taxonomy shared by all modules. The CLI maps each class to a
// distinct exit code (see tools/).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated a documented precondition (bad size, bad range, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// The request is well-formed but outside what this implementation supports
// (instance too large for the exact solver, non-3SAT clause, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (DIMACS, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure, reported with the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace satqubo
