#pragma once

#include <stdexcept>
#include <string>

namespace mlradii {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or violated precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series or search exceeded its iteration policy; the argument is out of
/// the supported evaluation regime.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// refine_root was handed an interval without a sign change.
class InvalidBracket : public Error {
 public:
  using Error::Error;
};

/// The zero scan found a near-zero local minimum of |f| with no sign change,
/// which signals a complex zero pair for parameters assumed to have real zeros.
class ZeroRealityViolation : public Error {
 public:
  using Error::Error;
};

/// The strong-starlike zero count doubled past its cap without the root
/// stabilizing.
class TailNotConverged : public Error {
 public:
  using Error::Error;
};

/// Parameters fall outside W_i and no real-zeros assertion was given.
class ParamsNotAdmitted : public Error {
 public:
  using Error::Error;
};

/// A solver could not certify its bracket or tolerance contract.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Boundary verification cannot bound its zero-sum truncation error below
/// 10% of the observed margin.
class InsufficientZeroTable : public Error {
 public:
  using Error::Error;
};

}  // namespace mlradii
