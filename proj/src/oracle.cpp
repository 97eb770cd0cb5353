#include "alsp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "alsp/arith.hpp"

namespace alsp {

namespace {

struct X0Data {
  std::int64_t index;  // [SL_2(Z) : Gamma_0(N)]
  std::int64_t eps2;   // elliptic points of order 2 (solutions of x^2+1 mod N)
  std::int64_t eps3;   // elliptic points of order 3 (solutions of x^2+x+1 mod N)
  std::int64_t cusps;
  std::int64_t genus;
};

X0Data x0_data(std::int64_t N) {
  if (N < 1) throw std::invalid_argument("dim_classical: level must be >= 1");
  X0Data d{N, 1, 1, 0, 0};
  for (const auto& pp : Factorization::of(N).entries()) {
    d.index = d.index / pp.prime * (pp.prime + 1);  // N * prod(1 + 1/p)
    if (pp.prime == 2)
      d.eps2 *= pp.exponent == 1 ? 1 : 0;
    else
      d.eps2 *= 1 + kronecker(-1, pp.prime);
    if (pp.prime == 3)
      d.eps3 *= pp.exponent == 1 ? 1 : 0;
    else
      d.eps3 *= 1 + kronecker(-3, pp.prime);  // 0 at p = 2, as it should be
  }
  for (std::int64_t div : divisors(N)) d.cusps += euler_phi(gcd0(div, N / div));
  const std::int64_t twelve_g = 12 + d.index - 3 * d.eps2 - 4 * d.eps3 - 6 * d.cusps;
  if (twelve_g % 12 != 0) throw std::logic_error("x0_data: genus formula not integral");
  d.genus = twelve_g / 12;
  return d;
}

}  // namespace

std::int64_t genus_x0(std::int64_t N) { return x0_data(N).genus; }

std::int64_t dim_classical(std::int64_t N, std::int64_t k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("dim_classical: k must be even and >= 2");
  const X0Data d = x0_data(N);
  if (k == 2) return d.genus;
  return (k - 1) * (d.genus - 1) + (k / 2 - 1) * d.cusps + (k / 4) * d.eps2 + (k / 3) * d.eps3;
}

std::int64_t dim_new_inversion(std::int64_t N, std::int64_t k) {
  // Inverse of dim(N) = sum_{d|N} sigma_0(N/d) dim_new(d) is mu*mu:
  // (mu*mu)(p) = -2, (mu*mu)(p^2) = 1, 0 beyond.
  auto mu_mu = [](std::int64_t n) -> std::int64_t {
    std::int64_t r = 1;
    for (const auto& pp : Factorization::of(n).entries()) {
      if (pp.exponent == 1)
        r *= -2;
      else if (pp.exponent > 2)
        return 0;
    }
    return r;
  };
  std::int64_t total = 0;
  for (std::int64_t d : divisors(N)) {
    const std::int64_t c = mu_mu(N / d);
    if (c != 0) total += c * dim_classical(d, k);
  }
  return total;
}

Rat hurwitz_bruteforce(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("hurwitz_bruteforce: n must be >= 0");
  if (n == 0) return Rat(-1, 12);
  if (n % 4 == 1 || n % 4 == 2) return Rat(0);
  std::int64_t twelve = 0;
  // For fixed n walk b (matching parity), then factor (n + b^2)/4 = a c.
  for (std::int64_t b = n % 2; 3 * b * b <= n; b += 2) {
    const std::int64_t ac = (n + b * b) / 4;
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
      if (ac % a != 0) continue;
      const std::int64_t c = ac / a;
      std::int64_t w;
      if (a == b && a == c)
        w = 4;
      else if (b == 0 && a == c)
        w = 6;
      else
        w = 12;
      if (b > 0 && b < a && c > a) w *= 2;
      twelve += w;
    }
  }
  Rat r(twelve, 12);
  r.canonicalize();
  return r;
}

std::vector<Int> delta_tau(std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("delta_tau: n_max must be >= 1");
  // Coefficients of prod_j (1-q^j)^24 up to degree n_max - 1; tau(n) is the
  // (n-1)st of them after the leading q shift.
  std::vector<Int> f((std::size_t)n_max, Int(0));
  f[0] = 1;
  for (std::int64_t j = 1; j < n_max; ++j)
    for (int rep = 0; rep < 24; ++rep)
      for (std::int64_t i = n_max - 1; i >= j; --i) f[(std::size_t)i] -= f[(std::size_t)(i - j)];
  std::vector<Int> tau((std::size_t)n_max + 1, Int(0));
  for (std::int64_t n = 1; n <= n_max; ++n) tau[(std::size_t)n] = f[(std::size_t)(n - 1)];
  return tau;
}

std::int64_t fricke_quotient_genus(std::int64_t N) {
  if (N <= 3 || !is_squarefree(N))
    throw std::invalid_argument("fricke_quotient_genus: need squarefree N > 3");
  const std::int64_t g = genus_x0(N);
  const Rat nu = hurwitz_bruteforce(4 * N);  // fixed points of W_N on X_0(N)
  if (!is_integer(nu)) throw std::logic_error("fricke_quotient_genus: fixed-point count not integral");
  const std::int64_t fixed = to_int64(nu);
  const std::int64_t four_gq = 2 * g + 2 - fixed;
  if (four_gq % 4 != 0 || four_gq < 0)
    throw std::logic_error("fricke_quotient_genus: Riemann-Hurwitz count failed");
  return four_gq / 4;
}

}  // namespace alsp
