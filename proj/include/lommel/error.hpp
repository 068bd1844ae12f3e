#pragma once

#include <stdexcept>
#include <string>

namespace lommel {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the admissible set, or a grid outside an operation's domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// The power prefactor of L or S has a vanishing denominator; the normalized
// function is still defined.
class DegeneratePrefactor : public Error {
 public:
  using Error::Error;
};

// A grid point escaped the region where a quotient or logarithm is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical failures: non-convergent series, failed root refinement, scans
// that miss requested zeros.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class NoSignChange : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace lommel
