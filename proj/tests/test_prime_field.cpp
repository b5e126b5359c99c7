#include <cstdint>
#include <vector>

#include "anrcert/prime_field.hpp"
#include "doctest.h"

using namespace anrcert;

namespace {

// Pascal-triangle oracle: C(n, k) mod p by the additive recurrence only.
std::vector<std::vector<std::uint64_t>> pascal_mod(std::uint64_t p, int n_max) {
  std::vector<std::vector<std::uint64_t>> rows(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) {
      rows[n][k] = (rows[n - 1][k - 1] + rows[n - 1][k]) % p;
    }
  }
  return rows;
}

}  // namespace

TEST_SUITE("prime_field") {

TEST_CASE("field construction accepts primes and rejects composites") {
  CHECK(PrimeField(5).modulus() == 5);
  CHECK(PrimeField(2).modulus() == 2);
  CHECK_THROWS_AS(PrimeField(6), CompositeModulusError);
  CHECK_THROWS_AS(PrimeField(1), CompositeModulusError);
  CHECK_THROWS_AS(PrimeField(0), CompositeModulusError);
  CHECK_THROWS_AS(PrimeField(91), CompositeModulusError);  // 7 * 13
  // Largest supported style of modulus: the Mersenne prime 2^61 - 1.
  const std::uint64_t big = (std::uint64_t{1} << 61) - 1;
  CHECK(PrimeField(big).modulus() == big);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 61), UnsupportedModulusError);
}

TEST_CASE("arithmetic reduces into range") {
  PrimeField f(5);
  CHECK((f.element(4) + f.element(1)).value() == 0);
  CHECK((f.element(3) * f.element(4)).value() == 2);
  CHECK((-f.element(2)).value() == 3);
  CHECK((f.element(1) - f.element(3)).value() == 3);
  CHECK(f.from_signed(-1).value() == 4);
  CHECK(f.element(12).value() == 2);
}

TEST_CASE("operations on mixed moduli are rejected") {
  PrimeField f5(5), f7(7);
  CHECK_THROWS_AS(f5.element(1) + f7.element(1), ModulusMismatchError);
  CHECK_THROWS_AS(f5.element(2) * f7.element(2), ModulusMismatchError);
  CHECK_THROWS_AS((void)(f5.element(2) == f7.element(2)), ModulusMismatchError);
}

TEST_CASE("inverse") {
  PrimeField f5(5), f7(7);
  CHECK(inverse(f5.element(2)).value() == 3);
  CHECK(inverse(f5.element(1)).value() == 1);
  CHECK_THROWS_AS(inverse(f5.element(0)), ZeroInverseError);

  // Scan oracle for the p=7 case: the unique y with 3y = 1 (mod 7).
  std::uint64_t expected = 0;
  for (std::uint64_t y = 1; y < 7; ++y) {
    if (3 * y % 7 == 1) expected = y;
  }
  CHECK(expected == 5);
  CHECK(inverse(f7.element(3)).value() == expected);

  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    PrimeField f(p);
    for (std::uint64_t x = 1; x < p; ++x) {
      CHECK((f.element(x) * inverse(f.element(x))).value() == 1);
    }
  }
}

TEST_CASE("pow") {
  PrimeField f(5);
  CHECK(pow(f.element(2), 3).value() == 3);
  CHECK(pow(f.element(0), 0).value() == 1);  // empty-product convention
  CHECK(pow(f.element(3), 4).value() == 1);
  CHECK(pow(f.element(0), 7).value() == 0);
}

TEST_CASE("Fermat: x^(p-1) = 1 for all nonzero x") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    PrimeField f(p);
    for (std::uint64_t x = 1; x < p; ++x) {
      CHECK(pow(f.element(x), p - 1).value() == 1);
    }
  }
}

TEST_CASE("binomial coefficients") {
  PrimeField f5(5);
  CHECK(binomial_mod_p(2, 1, f5).value() == 2);
  CHECK(binomial_mod_p(2, 3, f5).value() == 0);  // k > n
  CHECK(binomial_mod_p(0, 0, f5).value() == 1);
  // The nonvanishing difference for m=2, k=3: C(2,0) - C(2,1) = -1.
  CHECK((binomial_mod_p(2, 0, f5) - binomial_mod_p(2, 1, f5)).value() == 4);
  // 21 mod 5, which Lucas reads off the digits 7=(1,2)_5, 2=(0,2)_5.
  CHECK(binomial_mod_p(7, 2, f5).value() == 1);
}

TEST_CASE("binomial agrees with the Pascal recurrence up to n = 30") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    PrimeField f(p);
    const auto rows = pascal_mod(p, 30);
    for (int n = 0; n <= 30; ++n) {
      for (int k = 0; k <= n; ++k) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(binomial_mod_p(n, k, f).value() == rows[n][k]);
      }
    }
  }
}

TEST_CASE("binomial handles large n through the digit decomposition") {
  PrimeField f7(7);
  const auto rows = pascal_mod(7, 120);
  for (int n : {49, 50, 98, 100, 120}) {
    for (int k = 0; k <= n; k += 7) {
      CHECK(binomial_mod_p(n, k, f7).value() == rows[n][k]);
    }
  }
  PrimeField f2(2);
  const auto rows2 = pascal_mod(2, 64);
  for (int n : {31, 32, 63, 64}) {
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial_mod_p(n, k, f2).value() == rows2[n][k]);
    }
  }
}

TEST_CASE("ring axioms, exhaustive for small p") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    PrimeField f(p);
    for (std::uint64_t x = 0; x < p; ++x) {
      CHECK((f.element(x) + f.zero()) == f.element(x));
      CHECK((f.element(x) * f.one()) == f.element(x));
      CHECK((f.element(x) + (-f.element(x))).is_zero());
      for (std::uint64_t y = 0; y < p; ++y) {
        CHECK((f.element(x) + f.element(y)) == (f.element(y) + f.element(x)));
        CHECK((f.element(x) * f.element(y)) == (f.element(y) * f.element(x)));
        for (std::uint64_t z = 0; z < p; ++z) {
          CHECK(((f.element(x) + f.element(y)) + f.element(z)) ==
                (f.element(x) + (f.element(y) + f.element(z))));
          CHECK(((f.element(x) * f.element(y)) * f.element(z)) ==
                (f.element(x) * (f.element(y) * f.element(z))));
        }
      }
    }
  }
}

TEST_CASE("is_prime spot checks") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(61));
  CHECK(!is_prime(1));
  CHECK(!is_prime(561));   // Carmichael
  CHECK(!is_prime(25326001));
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));
}

}  // TEST_SUITE
