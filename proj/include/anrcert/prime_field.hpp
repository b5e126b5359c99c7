#ifndef ANRCERT_PRIME_FIELD_HPP
#define ANRCERT_PRIME_FIELD_HPP

#include <cstdint>

#include "anrcert/errors.hpp"

namespace anrcert {

class PrimeField;

/// One residue of Z/pZ. Carries its modulus so that mixing elements of
/// different fields is caught at the operation, not at the caller.
class Fp {
 public:
  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  Fp operator-() const;

  friend bool operator==(Fp a, Fp b);
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  friend Fp pow(Fp x, std::uint64_t exponent);

 private:
  friend class PrimeField;
  Fp(std::uint64_t value, std::uint64_t p) : value_(value), p_(p) {}
  void require_same_field(const Fp& other) const;

  std::uint64_t value_;
  std::uint64_t p_;
};

/// The field Z/pZ for a prime p. Construction runs a deterministic
/// Miller-Rabin test; composite moduli are rejected outright.
///
/// Supported range: p < 2^61, so that all products fit in 128-bit
/// intermediates and arithmetic stays exact without bignums.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  /// Residue of an arbitrary nonnegative integer.
  Fp element(std::uint64_t value) const { return Fp(value % p_, p_); }
  /// Residue of a signed integer (maps negatives into [0, p)).
  Fp from_signed(std::int64_t value) const;
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1 % p_, p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const PrimeField& a, const PrimeField& b) {
    return !(a == b);
  }

 private:
  std::uint64_t p_;
};

/// x^-1 in the field; throws ZeroInverseError on x = 0.
Fp inverse(Fp x);

/// x^e by square-and-multiply. The empty product convention applies:
/// pow(x, 0) = 1 for every x, including x = 0.
Fp pow(Fp x, std::uint64_t exponent);

/// C(n, k) mod p, exact for all n and k. Single base-p digit pairs go
/// through the factorial/inverse-factorial product; larger n decomposes
/// by Lucas's theorem. k > n yields 0.
Fp binomial_mod_p(std::uint64_t n, std::uint64_t k, const PrimeField& field);

/// Deterministic primality test for the supported modulus range.
bool is_prime(std::uint64_t n);

}  // namespace anrcert

#endif  // ANRCERT_PRIME_FIELD_HPP
