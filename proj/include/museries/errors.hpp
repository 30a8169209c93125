#pragma once

#include <stdexcept>
#include <string>

namespace museries {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented real domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// mu lies where the outer geometric ratio |mu/(mu+1)| >= 1.
class InvalidMu : public Error {
 public:
  using Error::Error;
};

// No mu in the searched interval reached the requested tolerance.
class NoConvergentMu : public Error {
 public:
  using Error::Error;
};

}  // namespace museries
