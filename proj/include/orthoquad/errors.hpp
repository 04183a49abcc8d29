#pragma once

#include <stdexcept>
#include <string>

namespace orthoquad {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid family parameters, arguments outside a function's domain, or
/// malformed user input. Maps to CLI exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Kernel evaluated at a singular value of z (z = ±1).
class SingularKernelError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Appell F4 arguments outside the region sqrt|xi| + sqrt|eta| < 1.
class ConvergenceDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Fewer than two nodes fell inside a spacing window.
class InsufficientNodesError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iteration cap was exhausted. Maps to CLI exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Result not representable in double; carries ln|value|.
class OverflowError : public NumericalError {
 public:
  OverflowError(const std::string& what, double log_value)
      : NumericalError(what), log_value_(log_value) {}
  double log_value() const noexcept { return log_value_; }

 private:
  double log_value_;
};

/// Adaptive integration did not reach its tolerance before the panel cap.
class AccuracyError : public NumericalError {
 public:
  AccuracyError(const std::string& what, double estimate_re, double estimate_im,
                double error_bound)
      : NumericalError(what),
        estimate_re_(estimate_re),
        estimate_im_(estimate_im),
        error_bound_(error_bound) {}
  double estimate_re() const noexcept { return estimate_re_; }
  double estimate_im() const noexcept { return estimate_im_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_re_;
  double estimate_im_;
  double error_bound_;
};

/// A sampled integrand returned a non-finite value at a quadrature node.
class EvaluationError : public NumericalError {
 public:
  EvaluationError(const std::string& what, int node)
      : NumericalError(what), node_(node) {}
  /// Zero-based node index.
  int node() const noexcept { return node_; }

 private:
  int node_;
};

}  // namespace orthoquad
