#include "alsp/trace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alsp/arith.hpp"
#include "alsp/lucas.hpp"
#include "alsp/structure.hpp"

namespace alsp {

namespace {

void validate_args(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("trace: weight must be even and >= 2");
  if (N < 1) throw std::invalid_argument("trace: level must be >= 1");
  if (m < 1) throw std::invalid_argument("trace: index m must be >= 1");
  if (gcd0(m, N) != 1) throw std::invalid_argument("trace: index m must be coprime to the level");
  if (!exactly_divides(Q, N))
    throw std::invalid_argument("trace: Q = " + std::to_string(Q) +
                                " is not an exact divisor of N = " + std::to_string(N));
}

Int assert_integral(const Rat& value, const char* what) {
  Rat c(value);
  c.canonicalize();
  if (c.get_den() != 1)
    throw ExactnessError(std::string(what) + ": expected an integer, got " + rat_str(c));
  return c.get_num();
}

std::int64_t assert_nonneg_dim(const Int& value, const char* what) {
  if (value < 0)
    throw ExactnessError(std::string(what) + ": negative dimension " + value.get_str());
  return to_int64(value);
}

double normalized_value(const Int& exact, std::int64_t k, std::int64_t m) {
  // exact / m^{(k-1)/2}, with the integral part of the power split off so the
  // rational division happens exactly.
  Rat r(exact);
  r /= int_pow(m, (unsigned long)((k - 2) / 2));
  return r.get_d() / std::sqrt((double)m);
}

}  // namespace

Rat s_local(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q,
            const HurwitzTable& table) {
  validate_args(k, N, m, Q);
  if (4 * m * Q > table.max_n())
    throw TableRangeError("s_local: needs Hurwitz table up to " + std::to_string(4 * m * Q) +
                          ", have " + std::to_string(table.max_n()));
  const std::int64_t NQ = N / Q;

  // Discriminant leg: s = Q'j, u = s^2/Q' = j^2 Q', Delta = Q'(u - 4m).
  Rat disc_sum(0);
  for (std::int64_t q1 : divisors(Q)) {
    const std::int64_t cof = Q / q1;
    const std::int64_t jmax = isqrt(4 * m / q1);
    for (std::int64_t j = 0; j <= jmax; ++j) {
      if (!is_squarefree(gcd0(j * j, cof))) continue;
      const std::int64_t u = j * j * q1;
      Rat term = Rat(lucas_even(k, u, m)) * level_hurwitz(NQ, q1 * (u - 4 * m), table);
      if (j > 0) term *= 2;  // s and -s contribute equally
      disc_sum += term;
    }
  }

  // Divisor-boundary leg.
  Rat boundary(0);
  const std::int64_t bq = big_B(Q), bnq = big_B(NQ);
  for (std::int64_t mp : divisors(m)) {
    const std::int64_t mc = m / mp;
    const Int weight = int_pow(std::min(mp, mc), (unsigned long)(k - 1));
    boundary += Rat(weight * gcd0(bq, mp + mc) * gcd0(bnq, mp - mc));
  }

  Rat result = Rat(-1, 2) * (disc_sum + boundary);
  if (k == 2 && is_square(NQ)) result += Rat(sigma0(Q) * sigma1(m));
  result.canonicalize();
  return result;
}

Int trace_exact_q(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q, Space space,
                  const HurwitzTable& table) {
  validate_args(k, N, m, Q);
  Rat total(0);
  for (std::int64_t d : divisors(N)) {
    std::int64_t coef;
    if (space == Space::full) {
      if (!is_squarefree(N / d)) continue;
      coef = mobius(Q / gcd0(Q, d));
    } else {
      coef = alpha(N / d);
    }
    if (coef == 0) continue;
    const std::int64_t qd = gcd0(Q, d);
    if (!exactly_divides(qd, d))
      throw ExactnessError("trace: (Q, N') failed to divide N' exactly");  // cannot happen for Q || N
    total += coef * s_local(k, d, m, qd, table);
  }
  return assert_integral(total, "trace");
}

std::vector<std::pair<std::int64_t, Int>> exact_traces_all_q(std::int64_t k, std::int64_t N,
                                                             std::int64_t m, Space space,
                                                             const HurwitzTable& table) {
  std::vector<std::pair<std::int64_t, Int>> out;
  for (std::int64_t q : exact_divisors(N)) out.emplace_back(q, trace_exact_q(k, N, m, q, space, table));
  return out;
}

Int sigma_combine(const SignPattern& sigma,
                  const std::vector<std::pair<std::int64_t, Int>>& traces_by_q) {
  Rat sum(0);
  for (const auto& [q, tr] : traces_by_q) sum += sigma(q) * Rat(tr);
  sum /= SignPattern::count(sigma.level());
  return assert_integral(sum, "sigma trace");
}

namespace {

TraceReport finish(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q,
                   std::string sigma_text, Space space, Int exact, const Rat& main_term) {
  TraceReport r;
  r.N = N;
  r.k = k;
  r.m = m;
  r.Q = Q;
  r.sigma = std::move(sigma_text);
  r.space = space;
  r.exact = std::move(exact);
  r.normalized = normalized_value(r.exact, k, m);
  r.predicted = main_term.get_d();
  r.residual = r.normalized - r.predicted;
  return r;
}

}  // namespace

TraceReport trace_q(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q, Space space,
                    const HurwitzTable& table) {
  Int exact = trace_exact_q(k, N, m, Q, space, table);
  return finish(k, N, m, Q, std::string(), space, std::move(exact),
                main_term_q(k, N, m, Q, space));
}

TraceReport trace_sigma(std::int64_t k, std::int64_t N, std::int64_t m, const SignPattern& sigma,
                        Space space, const HurwitzTable& table) {
  if (sigma.level() != N) throw std::invalid_argument("trace_sigma: pattern level mismatch");
  Int exact = sigma_combine(sigma, exact_traces_all_q(k, N, m, space, table));
  return finish(k, N, m, /*Q=*/1, sigma.str(), space, std::move(exact),
                main_term_sigma(k, N, m, sigma, space));
}

std::int64_t dim_space(std::int64_t k, std::int64_t N, Space space, const HurwitzTable& table) {
  return assert_nonneg_dim(trace_exact_q(k, N, 1, 1, space, table), "dim");
}

std::int64_t dim_sigma(std::int64_t k, std::int64_t N, const SignPattern& sigma, Space space,
                       const HurwitzTable& table) {
  if (sigma.level() != N) throw std::invalid_argument("dim_sigma: pattern level mismatch");
  Int exact = sigma_combine(sigma, exact_traces_all_q(k, N, 1, space, table));
  return assert_nonneg_dim(exact, "dim_sigma");
}

std::int64_t dim_global(std::int64_t k, std::int64_t N, int sign, Space space,
                        const HurwitzTable& table) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("dim_global: sign must be +-1");
  Rat half = Rat(trace_exact_q(k, N, 1, 1, space, table) +
                 sign * trace_exact_q(k, N, 1, N, space, table)) /
             2;
  return assert_nonneg_dim(assert_integral(half, "dim_global"), "dim_global");
}

std::vector<std::pair<SignPattern, std::int64_t>> dim_sigma_all(std::int64_t k, std::int64_t N,
                                                                Space space,
                                                                const HurwitzTable& table) {
  const auto traces = exact_traces_all_q(k, N, 1, space, table);
  std::vector<std::pair<SignPattern, std::int64_t>> out;
  for (SignPattern& s : SignPattern::all(N)) {
    const std::int64_t d = assert_nonneg_dim(sigma_combine(s, traces), "dim_sigma");
    out.emplace_back(std::move(s), d);
  }
  return out;
}

}  // namespace alsp
