#pragma once

#include <stdexcept>
#include <string>

namespace symcone {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two elements from different algebras were combined.
struct AlgebraMismatch : Error {
  using Error::Error;
};

// Element data malformed: wrong coordinate count, non-finite entries.
struct InvalidElement : Error {
  using Error::Error;
};

// Inversion requested for an element with a (numerically) zero eigenvalue.
struct Singular : Error {
  using Error::Error;
};

// Iterative kernel (Jacobi sweep) failed to reach its tolerance.
struct ConvergenceFailure : Error {
  using Error::Error;
};

// Scalar function applied across a spectrum produced a non-finite value.
struct DomainError : Error {
  using Error::Error;
};

struct NotIdempotent : Error {
  using Error::Error;
};

struct NotInSubalgebra : Error {
  using Error::Error;
};

// x lies in the subalgebra but has no inverse there.
struct SingularInSubalgebra : Error {
  using Error::Error;
};

// Argument must lie in the closed cone.
struct NotInCone : Error {
  using Error::Error;
};

// Argument must lie in the open cone.
struct NotInteriorCone : Error {
  using Error::Error;
};

// (e, x) pair violates the boundary-chart invariants.
struct InvalidBoundaryPoint : Error {
  using Error::Error;
};

// Element has spectrum outside [-1, 1].
struct OutOfInterval : Error {
  using Error::Error;
};

struct ParameterOutOfRange : Error {
  using Error::Error;
};

// Witness requested for a point outside the admissible set.
struct NotMember : Error {
  using Error::Error;
};

// Descriptor or input text failed to parse; position() is a byte offset.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// A rejection-sampling loop hit its retry cap.
struct RetryExhausted : Error {
  using Error::Error;
};

}  // namespace symcone
