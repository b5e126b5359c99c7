#ifndef ANRCERT_ERRORS_HPP
#define ANRCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace anrcert {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested modulus is not a prime.
class CompositeModulusError : public Error {
 public:
  using Error::Error;
};

// The requested modulus is outside the supported range (p < 2^61).
class UnsupportedModulusError : public Error {
 public:
  using Error::Error;
};

// Two operands from different prime fields were mixed.
class ModulusMismatchError : public Error {
 public:
  using Error::Error;
};

// Multiplicative inverse of zero.
class ZeroInverseError : public Error {
 public:
  using Error::Error;
};

// Elimination found no usable pivot.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Matrix/vector shapes do not fit the operation.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// A residue set violates its invariants (duplicates, out of range, bad literal).
class InvalidSetError : public Error {
 public:
  using Error::Error;
};

// An operation that requires nonempty input received an empty set.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// A weight sequence does not line up with its support.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// All weights in a sequence vanish where a nonzero sequence is required.
class ZeroWeightsError : public Error {
 public:
  using Error::Error;
};

// A mathematically impossible state was reached; signals an arithmetic bug.
class InternalInconsistencyError : public Error {
 public:
  using Error::Error;
};

// A moment list is too short for the requested convolution index.
class InsufficientMomentsError : public Error {
 public:
  using Error::Error;
};

// reduce_oversized called on a pair that is not above the modulus window.
class NotOversizedError : public Error {
 public:
  using Error::Error;
};

// The distinct-size hypothesis |A| != |B| is violated.
class EqualSizesError : public Error {
 public:
  using Error::Error;
};

// An exhaustive sweep would exceed the configured pair budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// A serialized certificate does not match the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace anrcert

#endif  // ANRCERT_ERRORS_HPP
