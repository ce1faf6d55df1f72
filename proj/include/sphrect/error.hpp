#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sphrect {

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Complete elliptic integral of the first kind at modulus 1.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Evaluation requested exactly at a pole of the integrand.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A structural precondition (path geometry, malformed input) does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Adaptive quadrature ran out of its subdivision budget.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, std::complex<double> best_estimate,
                double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_.real(); }
  std::complex<double> best_complex_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  std::complex<double> best_estimate_;
  double error_estimate_;
};

// No (or more than one) sign change where exactly one root was expected.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A critical value of a rational map is not in {0, 1, inf}.
class BelyiViolation : public std::runtime_error {
 public:
  BelyiViolation(const std::string& what, std::string offending_point)
      : std::runtime_error(what), offending_point_(std::move(offending_point)) {}

  const std::string& offending_point() const noexcept { return offending_point_; }

 private:
  std::string offending_point_;
};

}  // namespace sphrect
