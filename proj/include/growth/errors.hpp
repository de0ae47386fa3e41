#pragma once

#include <stdexcept>
#include <string>

namespace growth {

// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised only when a group runs in checked 128-bit mode.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class ClosureBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class DegenerateSphere : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

// extrapolate_rate on a window whose verdict is polynomial.
class FitRejected : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidGenus : public Error {
 public:
  using Error::Error;
};

}  // namespace growth
