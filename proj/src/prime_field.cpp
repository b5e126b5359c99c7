#include "anrcert/prime_field.hpp"

#include <algorithm>
#include <initializer_list>

namespace anrcert {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  x %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, x, m);
    x = mul_mod(x, x, m);
    e >>= 1;
  }
  return r;
}

// Witness set sufficient for a deterministic answer below 2^64.
constexpr std::initializer_list<std::uint64_t> kWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : kWitnesses) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= kMaxModulus) {
    throw UnsupportedModulusError(std::to_string(p) +
                                  " exceeds the supported modulus range (p < 2^61)");
  }
  if (!is_prime(p)) {
    throw CompositeModulusError(std::to_string(p) + " is not prime");
  }
}

Fp PrimeField::from_signed(std::int64_t value) const {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return Fp(static_cast<std::uint64_t>(r), p_);
}

void Fp::require_same_field(const Fp& other) const {
  if (p_ != other.p_) {
    throw ModulusMismatchError("mixed moduli " + std::to_string(p_) + " and " +
                               std::to_string(other.p_));
  }
}

Fp operator+(Fp a, Fp b) {
  a.require_same_field(b);
  std::uint64_t s = a.value_ + b.value_;
  if (s >= a.p_) s -= a.p_;
  return Fp(s, a.p_);
}

Fp operator-(Fp a, Fp b) {
  a.require_same_field(b);
  std::uint64_t s = a.value_ >= b.value_ ? a.value_ - b.value_
                                         : a.value_ + a.p_ - b.value_;
  return Fp(s, a.p_);
}

Fp operator*(Fp a, Fp b) {
  a.require_same_field(b);
  return Fp(mul_mod(a.value_, b.value_, a.p_), a.p_);
}

Fp Fp::operator-() const {
  return Fp(value_ == 0 ? 0 : p_ - value_, p_);
}

bool operator==(Fp a, Fp b) {
  a.require_same_field(b);
  return a.value_ == b.value_;
}

Fp pow(Fp x, std::uint64_t exponent) {
  return Fp(pow_mod(x.value_, exponent, x.p_), x.p_);
}

Fp inverse(Fp x) {
  if (x.is_zero()) {
    throw ZeroInverseError("zero has no inverse mod " +
                           std::to_string(x.modulus()));
  }
  return pow(x, x.modulus() - 2);
}

namespace {

// C(n, k) for a single base-p digit pair, 0 <= k <= n < p.
Fp binomial_digit(std::uint64_t n, std::uint64_t k, const PrimeField& field) {
  k = std::min(k, n - k);
  Fp num = field.one();
  Fp den = field.one();
  for (std::uint64_t i = 1; i <= k; ++i) {
    num = num * field.element(n + 1 - i);
    den = den * field.element(i);
  }
  return num * inverse(den);
}

}  // namespace

Fp binomial_mod_p(std::uint64_t n, std::uint64_t k, const PrimeField& field) {
  if (k > n) return field.zero();
  const std::uint64_t p = field.modulus();
  Fp result = field.one();
  while (n != 0 || k != 0) {
    std::uint64_t nd = n % p;
    std::uint64_t kd = k % p;
    if (kd > nd) return field.zero();
    result = result * binomial_digit(nd, kd, field);
    n /= p;
    k /= p;
  }
  return result;
}

}  // namespace anrcert
