#include "alsp/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace alsp {

Factorization Factorization::of(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("factor: argument must be positive");
  Factorization f;
  f.value_ = n;
  auto strip = [&](std::int64_t p) {
    if (n % p) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.entries_.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) f.entries_.push_back({n, 1});
  return f;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::int64_t d = 5; d * d <= n; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

bool is_squarefree(std::int64_t n) {
  for (const auto& pp : Factorization::of(n).entries())
    if (pp.exponent >= 2) return false;
  return true;
}

int mobius(std::int64_t n) {
  const auto f = Factorization::of(n);
  for (const auto& pp : f.entries())
    if (pp.exponent >= 2) return 0;
  return f.omega() % 2 ? -1 : 1;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (const auto& pp : Factorization::of(n).entries()) r = r / pp.prime * (pp.prime - 1);
  return r;
}

std::int64_t sigma0(std::int64_t n) {
  std::int64_t r = 1;
  for (const auto& pp : Factorization::of(n).entries()) r *= pp.exponent + 1;
  return r;
}

std::int64_t sigma1(std::int64_t n) {
  std::int64_t r = 1;
  for (const auto& pp : Factorization::of(n).entries()) {
    std::int64_t term = 1, q = 1;
    for (int i = 0; i < pp.exponent; ++i) {
      q *= pp.prime;
      term += q;
    }
    r *= term;
  }
  return r;
}

std::int64_t big_B(std::int64_t n) {
  std::int64_t b = 1;
  for (const auto& pp : Factorization::of(n).entries())
    for (int i = 0; i < pp.exponent / 2; ++i) b *= pp.prime;
  return b;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> ds{1};
  for (const auto& pp : Factorization::of(n).entries()) {
    const std::size_t base = ds.size();
    std::int64_t q = 1;
    for (int i = 0; i < pp.exponent; ++i) {
      q *= pp.prime;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * q);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<std::int64_t> exact_divisors(std::int64_t n) {
  std::vector<std::int64_t> ds{1};
  for (const auto& pp : Factorization::of(n).entries()) {
    std::int64_t q = 1;
    for (int i = 0; i < pp.exponent; ++i) q *= pp.prime;
    const std::size_t base = ds.size();
    for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * q);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    int twos = 0;
    while (n % 2 == 0) {
      n /= 2;
      ++twos;
    }
    std::int64_t a8 = a % 8;
    if (a8 < 0) a8 += 8;
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol for odd n > 0 by quadratic reciprocity.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool exactly_divides(std::int64_t q, std::int64_t n) {
  if (q <= 0 || n <= 0 || n % q != 0) return false;
  return std::gcd(q, n / q) == 1;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  auto r = (std::int64_t)std::sqrt((double)n);
  // 128-bit squares: near INT64_MAX the fixup squares overflow 64 bits.
  while (r > 0 && (__int128)r * r > n) --r;
  while ((__int128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  const std::int64_t r = isqrt(n);
  return r * r == n;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("ipow: overflow");
  }
  return (std::int64_t)r;
}

}  // namespace alsp
