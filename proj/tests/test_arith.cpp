#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "alsp/arith.hpp"
#include "doctest.h"

using namespace alsp;

TEST_SUITE_BEGIN("arith");

TEST_CASE("factorization basics") {
  auto f1 = Factorization::of(1);
  CHECK(f1.value() == 1);
  CHECK(f1.omega() == 0);
  CHECK(f1.entries().empty());

  auto f = Factorization::of(360);  // 2^3 3^2 5
  REQUIRE(f.omega() == 3);
  CHECK(f.entries()[0].prime == 2);
  CHECK(f.entries()[0].exponent == 3);
  CHECK(f.entries()[1].prime == 3);
  CHECK(f.entries()[1].exponent == 2);
  CHECK(f.entries()[2].prime == 5);
  CHECK(f.entries()[2].exponent == 1);

  CHECK_THROWS_AS(Factorization::of(0), std::invalid_argument);
  CHECK_THROWS_AS(Factorization::of(-12), std::invalid_argument);
}

TEST_CASE("factorization reassembles and primality matches trial division") {
  for (std::int64_t n = 1; n <= 2000; ++n) {
    std::int64_t prod = 1;
    for (const auto& pp : Factorization::of(n).entries()) {
      CHECK(is_prime(pp.prime));
      for (int i = 0; i < pp.exponent; ++i) prod *= pp.prime;
    }
    CHECK(prod == n);
    bool brute = n >= 2;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) brute = false;
    CHECK(is_prime(n) == brute);
  }
}

TEST_CASE("squarefree and Moebius agree with direct definitions") {
  for (std::int64_t n = 1; n <= 1000; ++n) {
    bool sf = true;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % (d * d) == 0) sf = false;
    CHECK(is_squarefree(n) == sf);
    CHECK(mobius(n) == (sf ? (Factorization::of(n).omega() % 2 ? -1 : 1) : 0));
  }
  // sum_{d | n} mu(d) = [n = 1]
  for (std::int64_t n = 1; n <= 300; ++n) {
    std::int64_t s = 0;
    for (std::int64_t d : divisors(n)) s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("phi, sigma0, sigma1 divisor identities") {
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::int64_t phi_sum = 0, count = 0, sum = 0;
    for (std::int64_t d : divisors(n)) {
      phi_sum += euler_phi(d);
      ++count;
      sum += d;
    }
    CHECK(phi_sum == n);  // sum of phi over divisors
    CHECK(sigma0(n) == count);
    CHECK(sigma1(n) == sum);
  }
}

TEST_CASE("big_B extracts the largest square divisor") {
  CHECK(big_B(1) == 1);
  CHECK(big_B(4) == 2);
  CHECK(big_B(12) == 2);
  CHECK(big_B(72) == 6);
  CHECK(big_B(30) == 1);
  for (std::int64_t n = 1; n <= 1000; ++n) {
    const std::int64_t b = big_B(n);
    CHECK(n % (b * b) == 0);
    CHECK(is_squarefree(n / (b * b)));
    // maximality: no larger square divides
    for (std::int64_t c = b + 1; c * c <= n; ++c) CHECK(n % (c * c) != 0);
  }
}

TEST_CASE("divisor lists are ascending and complete") {
  const auto ds = divisors(72);
  CHECK(ds == std::vector<std::int64_t>{1, 2, 3, 4, 6, 8, 9, 12, 18, 24, 36, 72});
  const auto eds = exact_divisors(72);
  CHECK(eds == std::vector<std::int64_t>{1, 8, 9, 72});
  for (std::int64_t q : eds) CHECK(exactly_divides(q, 72));
  CHECK(exact_divisors(1) == std::vector<std::int64_t>{1});
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::size_t i = 0;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) CHECK(divisors(n)[i++] == d);
    CHECK(i == divisors(n).size());
  }
}

TEST_CASE("Kronecker symbol matches GMP over a full window") {
  for (std::int64_t a = -80; a <= 80; ++a)
    for (std::int64_t n = -80; n <= 80; ++n) {
      if (a == 0 && n == 0) {
        CHECK(kronecker(0, 0) == 0);
        continue;
      }
      mpz_class za(static_cast<long>(a)), zn(static_cast<long>(n));
      CHECK_MESSAGE(kronecker(a, n) == mpz_kronecker(za.get_mpz_t(), zn.get_mpz_t()),
                    "a=", a, " n=", n);
    }
}

TEST_CASE("Kronecker total extension edge cases") {
  CHECK(kronecker(1, 0) == 1);
  CHECK(kronecker(-1, 0) == 1);
  CHECK(kronecker(2, 0) == 0);
  CHECK(kronecker(0, 1) == 1);
  CHECK(kronecker(0, 2) == 0);
  CHECK(kronecker(7, 1) == 1);
  CHECK(kronecker(-7, 1) == 1);
  // (a/2): 0 for even a, +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
  CHECK(kronecker(7, 2) == 1);
  CHECK(kronecker(3, 2) == -1);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(6, 2) == 0);
}

TEST_CASE("exactly_divides") {
  CHECK(exactly_divides(1, 12));
  CHECK(exactly_divides(4, 12));
  CHECK(exactly_divides(3, 12));
  CHECK(exactly_divides(12, 12));
  CHECK_FALSE(exactly_divides(2, 12));
  CHECK_FALSE(exactly_divides(6, 12));
  CHECK_FALSE(exactly_divides(5, 12));
  CHECK_FALSE(exactly_divides(0, 12));
  CHECK_FALSE(exactly_divides(-1, 12));
}

TEST_CASE("isqrt and is_square are exact at boundaries") {
  CHECK(isqrt(0) == 0);
  CHECK_THROWS_AS(isqrt(-1), std::invalid_argument);
  for (std::int64_t r = 0; r <= 3000; ++r) {
    CHECK(isqrt(r * r) == r);
    if (r > 0) CHECK(isqrt(r * r - 1) == r - 1);
    if (r > 0) CHECK(isqrt(r * r + 1) == r);  // 0^2 + 1 is itself a square
    CHECK(is_square(r * r));
    if (r > 1) CHECK_FALSE(is_square(r * r + 1));
  }
  // values near INT64 scale where double sqrt rounds
  const std::int64_t big = 3037000499;  // floor sqrt of INT64_MAX
  CHECK(isqrt(big * big) == big);
  CHECK(isqrt(big * big - 1) == big - 1);
}

TEST_CASE("gcd0 conventions") {
  CHECK(gcd0(0, 0) == 0);
  CHECK(gcd0(5, 0) == 5);
  CHECK(gcd0(0, 5) == 5);
  CHECK(gcd0(-4, 6) == 2);
  CHECK(gcd0(4, -6) == 2);
  CHECK(gcd0(1, -1) == 1);
}

TEST_CASE("ipow checks overflow") {
  CHECK(ipow(2, 10) == 1024);
  CHECK(ipow(10, 0) == 1);
  CHECK(ipow(-3, 3) == -27);
  CHECK_THROWS_AS(ipow(10, 20), std::overflow_error);
  CHECK_THROWS_AS(ipow(2, -1), std::invalid_argument);
}

TEST_SUITE_END();
