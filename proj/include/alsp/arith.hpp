#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace alsp {

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

// Prime factorization by trial division; fine for the level/index ranges this
// engine targets (<= ~10^12 would still be tolerable, we stay far below).
class Factorization {
 public:
  static Factorization of(std::int64_t n);  // rejects n <= 0

  std::int64_t value() const { return value_; }
  // Ascending primes.  The rvalue overload returns by value so that
  // `for (auto& pp : Factorization::of(n).entries())` never dangles (the
  // C++23 range-for lifetime extension is not available here).
  const std::vector<PrimePower>& entries() const& { return entries_; }
  std::vector<PrimePower> entries() && { return std::move(entries_); }
  int omega() const { return (int)entries_.size(); }

 private:
  std::int64_t value_ = 1;
  std::vector<PrimePower> entries_;
};

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);  // n >= 1
int mobius(std::int64_t n);          // n >= 1
std::int64_t euler_phi(std::int64_t n);
std::int64_t sigma0(std::int64_t n);
std::int64_t sigma1(std::int64_t n);

// Largest a with a^2 | n, so n = B(n)^2 * squarefree.
std::int64_t big_B(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);        // ascending
std::vector<std::int64_t> exact_divisors(std::int64_t n);  // Q || n, ascending

// Kronecker symbol (a/n), totally extended: (a/0) = 1 iff a = +-1 else 0,
// (a/-1) = -1 iff a < 0, (a/2) by the mod-8 rule.
int kronecker(std::int64_t a, std::int64_t n);

// gcd on |.| with gcd0(x, 0) = |x| and gcd0(0, 0) = 0.
inline std::int64_t gcd0(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

bool exactly_divides(std::int64_t q, std::int64_t n);  // q || n

std::int64_t isqrt(std::int64_t n);  // floor sqrt, n >= 0
bool is_square(std::int64_t n);

// Overflow-checked small integer power; throws std::overflow_error.
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace alsp
