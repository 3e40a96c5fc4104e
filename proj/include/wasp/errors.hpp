#pragma once

#include <stdexcept>
#include <string>

namespace wasp {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied an input that violates a precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class EmptyMeasure : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Exponent outside the supported range (1, 16].
class InvalidExponent : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Two measures that must agree as measures do not.
class MarginalMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A coupling handed in as optimal is not.
class NotOptimal : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Internal numerical failure (simplex breakdown, a proven-monotone sequence
/// that is not).
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace wasp
