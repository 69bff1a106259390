#pragma once

#include <stdexcept>
#include <string>

namespace lielab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Indices are 1-based; `residual` is the nonzero Jacobi sum rendered as text.
class JacobiViolation : public Error {
 public:
  JacobiViolation(int i, int j, int k, std::string residual)
      : Error("Jacobi identity fails on (x" + std::to_string(i) + ", x" + std::to_string(j) + ", x" +
              std::to_string(k) + "): residual " + residual),
        i_(i), j_(j), k_(k), residual_(std::move(residual)) {}
  int i() const { return i_; }
  int j() const { return j_; }
  int k() const { return k_; }
  const std::string& residual() const { return residual_; }

 private:
  int i_, j_, k_;
  std::string residual_;
};

#define LIELAB_SIMPLE_ERROR(Name)   \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  };

LIELAB_SIMPLE_ERROR(IndexOutOfRange)
LIELAB_SIMPLE_ERROR(NotAnIdeal)
LIELAB_SIMPLE_ERROR(NotADerivation)
LIELAB_SIMPLE_ERROR(DegreeOutOfRange)
LIELAB_SIMPLE_ERROR(NotInvariant)
LIELAB_SIMPLE_ERROR(CrossCheckMismatch)
LIELAB_SIMPLE_ERROR(UnsupportedType)
LIELAB_SIMPLE_ERROR(NotAGCM)
LIELAB_SIMPLE_ERROR(UnknownName)
LIELAB_SIMPLE_ERROR(SizeLimitExceeded)

#undef LIELAB_SIMPLE_ERROR

}  // namespace lielab
