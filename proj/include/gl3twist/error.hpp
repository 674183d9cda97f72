#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gl3twist {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient, eigenvalue or table entry outside the data that was supplied.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at a logarithmic singularity of the phase function.
class PhaseSingularity : public Error {
 public:
  using Error::Error;
};

class GammaPole : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An asymptotic formula was asked for outside the range where it applies.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Quadrature could not reach the requested tolerance. Carries the best
/// estimate obtained so the caller can decide whether to keep it.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, std::complex<double> best, double error_estimate)
      : Error(what), best_(best), error_estimate_(error_estimate) {}

  std::complex<double> best_estimate() const { return best_; }
  double error_estimate() const { return error_estimate_; }

 private:
  std::complex<double> best_;
  double error_estimate_;
};

}  // namespace gl3twist
