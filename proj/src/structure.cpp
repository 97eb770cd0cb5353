#include "alsp/structure.hpp"

#include <stdexcept>

#include "alsp/arith.hpp"

namespace alsp {

std::int64_t psi(std::int64_t N) {
  std::int64_t r = N;
  for (const auto& pp : Factorization::of(N).entries()) r = r / pp.prime * (pp.prime + 1);
  return r;
}

std::int64_t psi_new(std::int64_t N) {
  std::int64_t r = 1;
  for (const auto& pp : Factorization::of(N).entries()) {
    const std::int64_t p = pp.prime;
    switch (pp.exponent) {
      case 1: r *= p - 1; break;
      case 2: r *= p * p - p - 1; break;
      default: {
        // p^{r-3} (p^3 - p^2 - p + 1) = p^{r-3} (p-1)^2 (p+1)
        std::int64_t v = (p - 1) * (p - 1) * (p + 1);
        for (int i = 3; i < pp.exponent; ++i) v *= p;
        r *= v;
      }
    }
  }
  return r;
}

Rat eta(std::int64_t Q) {
  Rat r(1);
  for (const auto& pp : Factorization::of(Q).entries()) {
    if (pp.exponent != 2) return Rat(0);
    r *= Rat(-1, pp.prime * pp.prime - pp.prime - 1);
  }
  r.canonicalize();
  return r;
}

int alpha(std::int64_t n) {
  int r = 1;
  for (const auto& pp : Factorization::of(n).entries()) {
    if (pp.exponent >= 4) return 0;
    if (pp.exponent <= 2) r = -r;  // exponent 3 contributes +1
  }
  return r;
}

std::int64_t theta(std::int64_t M, std::int64_t d) {
  if (M < 1 || d < 1) throw std::invalid_argument("theta: arguments must be positive");
  return d / gcd0(M, d);
}

bool cubefree_square(std::int64_t N) {
  for (const auto& pp : Factorization::of(N).entries())
    if (pp.exponent != 2) return false;
  return true;
}

std::int64_t sum_mu(std::int64_t N, std::int64_t Q) {
  if (!exactly_divides(Q, N)) throw std::invalid_argument("sum_mu: need Q || N");
  std::int64_t s = 0;
  for (std::int64_t d : divisors(N)) {
    if (!is_squarefree(N / d)) continue;
    s += mobius(Q / gcd0(Q, d)) * theta(Q, d);
  }
  return s;
}

std::int64_t sum_alpha(std::int64_t N, std::int64_t Q) {
  if (!exactly_divides(Q, N)) throw std::invalid_argument("sum_alpha: need Q || N");
  std::int64_t s = 0;
  for (std::int64_t d : divisors(N)) s += alpha(N / d) * theta(Q, d);
  return s;
}

bool check_sum_mu(std::int64_t N, std::int64_t Q) {
  return sum_mu(N, Q) == (Q == 1 ? psi(N) : 0);
}

bool check_sum_alpha(std::int64_t N, std::int64_t Q) {
  return Rat((long)sum_alpha(N, Q)) == Rat((long)psi_new(N)) * eta(Q);
}

Rat sigma_factor(const SignPattern& sigma) {
  Rat r(1);
  for (const auto& [q, s] : sigma.entries()) r *= Rat(1) + s * eta(q);
  r.canonicalize();
  return r;
}

std::pair<double, double> sigma_factor_bounds() { return {0.71546, 2.67412}; }

bool sigma_factor_within_bounds(const Rat& factor) {
  // Exact comparison against the pinned decimal endpoints.
  return factor >= Rat(71546, 100000) && factor <= Rat(267412, 100000);
}

namespace {

// 1/sqrt(m) as an exact rational when m is a perfect square, else nullopt
// (the main term vanishes for non-square m).
Rat inv_sqrt_or_zero(std::int64_t m, bool* square) {
  if (is_square(m)) {
    *square = true;
    return Rat(1, isqrt(m));
  }
  *square = false;
  return Rat(0);
}

}  // namespace

Rat main_term_q(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q, Space space) {
  if (!exactly_divides(Q, N)) throw std::invalid_argument("main_term_q: need Q || N");
  bool square = false;
  const Rat invs = inv_sqrt_or_zero(m, &square);
  if (!square) return Rat(0);
  Rat r = Rat(k - 1, 12) * invs;
  if (space == Space::full) {
    if (Q != 1) return Rat(0);
    r *= psi(N);
  } else {
    r *= Rat((long)psi_new(N)) * eta(Q);
  }
  r.canonicalize();
  return r;
}

Rat main_term_sigma(std::int64_t k, std::int64_t N, std::int64_t m, const SignPattern& sigma,
                    Space space) {
  if (sigma.level() != N) throw std::invalid_argument("main_term_sigma: pattern level mismatch");
  bool square = false;
  const Rat invs = inv_sqrt_or_zero(m, &square);
  if (!square) return Rat(0);
  Rat r = Rat(k - 1, 12) * invs / SignPattern::count(N);
  if (space == Space::full)
    r *= psi(N);
  else
    r *= Rat((long)psi_new(N)) * sigma_factor(sigma);
  r.canonicalize();
  return r;
}

Rat proportion_sigma(std::int64_t N, const SignPattern& sigma, Space space) {
  if (sigma.level() != N) throw std::invalid_argument("proportion_sigma: pattern level mismatch");
  Rat r = Rat(1, SignPattern::count(N));
  if (space == Space::newspace) r *= sigma_factor(sigma);
  r.canonicalize();
  return r;
}

Rat proportion_global(std::int64_t N, int sign, Space space) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("proportion_global: sign must be +-1");
  if (N < 1) throw std::invalid_argument("proportion_global: level must be >= 1");
  Rat bias(0);
  if (space == Space::full) {
    bias = N == 1 ? Rat(1, 2) : Rat(0);
  } else if (cubefree_square(N)) {
    bias = Rat(1, 2);
    for (const auto& pp : Factorization::of(N).entries())
      bias *= Rat(-1, pp.prime * pp.prime - pp.prime - 1);
  }
  Rat r = Rat(1, 2) + sign * bias;
  r.canonicalize();
  return r;
}

}  // namespace alsp
