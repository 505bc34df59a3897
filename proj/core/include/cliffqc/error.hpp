#pragma once

#include <stdexcept>
#include <string>

namespace cliffqc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument values (negative exponents, out-of-range orders, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Malformed input text (geometry files, basis files, CSV tables).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = -1)
      : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Adaptive quadrature failed to reach the requested tolerance.
/// Carries the best value obtained and its error estimate.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double best_value, double estimate)
      : Error(what), best_value_(best_value), estimate_(estimate) {}
  double best_value() const { return best_value_; }
  double error_estimate() const { return estimate_; }

 private:
  double best_value_;
  double estimate_;
};

/// Overlap matrix too ill-conditioned for the requested orthogonalization.
class LinearDependenceError : public Error {
 public:
  LinearDependenceError(const std::string& what, double condition_number)
      : Error(what), condition_number_(condition_number) {}
  double condition_number() const { return condition_number_; }

 private:
  double condition_number_;
};

/// Request hit a code path that is wired up but not validated (2C/3C
/// nuclear-attraction and ERI quadratures).
class ExperimentalPathError : public Error {
 public:
  explicit ExperimentalPathError(const std::string& what) : Error(what) {}
};

/// Filesystem-level failure (unwritable path, missing file).
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace cliffqc
