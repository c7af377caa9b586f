// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qtex {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Size/shape problems: non-square input, mismatched dims, size cap exceeded.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its admissible range (alpha, z, theta, phi, mu, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A domain-type invariant failed at construction (hermiticity, trace,
/// positivity, unit norm, Kraus completeness).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure past validation: eigensolver non-convergence,
/// singular matrix power, non-Hermitian pairing residue.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Operator fails the witness conditions for every state.
class WitnessError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or unparsable CLI argument.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtex
