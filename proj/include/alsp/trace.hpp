#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alsp/classnum.hpp"
#include "alsp/rational.hpp"
#include "alsp/sign_pattern.hpp"

namespace alsp {

// An exactness guarantee (integrality / nonnegativity) failed.  This never
// fires on correct inputs; it is kept as a hard error so a regression cannot
// silently round its way through.
struct ExactnessError : std::logic_error {
  using std::logic_error::logic_error;
};

struct TraceReport {
  std::int64_t N = 1;
  std::int64_t k = 2;
  std::int64_t m = 1;
  std::int64_t Q = 1;     // meaningful when sigma is empty
  std::string sigma;      // canonical pattern text for the sign-pattern form
  Space space = Space::full;
  Int exact;              // integer trace of T_m composed with W_Q (resp. on the sigma eigenspace)
  double normalized = 0;  // exact / m^{(k-1)/2}
  double predicted = 0;   // main term of the normalized trace
  double residual = 0;    // normalized - predicted
};

// Local building block s_{k,N}(m, Q) of the trace convolution, unnormalized
// (multiplied through by m^{(k-1)/2} so everything stays rational):
//   -1/2 [ sum_{Q'|Q} sum_s p_k(s/sqrt(Q'), m) H_{N/Q}(s^2 - 4mQ')
//          + sum_{m'|m} min(m', m/m')^{k-1} (B(Q), m'+m/m') (B(N/Q), m'-m/m') ]
//   + [k=2][N/Q square] sigma_0(Q) sigma_1(m)
// where s runs over Q'|s, s^2 <= 4mQ' with ((s/Q')^2, Q/Q') squarefree, and
// the second gcd uses (x, 0) = x.
// Requires k even >= 2, gcd(m, N) = 1, Q || N, and a Hurwitz table covering
// 4mQ (rejected up front, no partial sums).
Rat s_local(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q,
            const HurwitzTable& table);

// Integer trace of T_m W_Q on S_k(N) (space = full) or its new subspace:
// divisor convolutions of s_local with mu / alpha weights.
Int trace_exact_q(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q, Space space,
                  const HurwitzTable& table);

// trace_exact_q over every exact divisor Q || N, ascending; shares nothing
// fancier than the loop but keeps callers from re-validating arguments.
std::vector<std::pair<std::int64_t, Int>> exact_traces_all_q(std::int64_t k, std::int64_t N,
                                                             std::int64_t m, Space space,
                                                             const HurwitzTable& table);

// 2^{-omega} sum_{Q || N} sigma(Q) trace(Q); integrality asserted.
Int sigma_combine(const SignPattern& sigma,
                  const std::vector<std::pair<std::int64_t, Int>>& traces_by_q);

TraceReport trace_q(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q, Space space,
                    const HurwitzTable& table);
TraceReport trace_sigma(std::int64_t k, std::int64_t N, std::int64_t m, const SignPattern& sigma,
                        Space space, const HurwitzTable& table);

inline TraceReport trace_full(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q,
                              const HurwitzTable& t) {
  return trace_q(k, N, m, Q, Space::full, t);
}
inline TraceReport trace_new(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q,
                             const HurwitzTable& t) {
  return trace_q(k, N, m, Q, Space::newspace, t);
}

// Dimensions are traces at m = 1; nonnegativity asserted.
std::int64_t dim_space(std::int64_t k, std::int64_t N, Space space, const HurwitzTable& table);
std::int64_t dim_sigma(std::int64_t k, std::int64_t N, const SignPattern& sigma, Space space,
                       const HurwitzTable& table);
// Eigenspace of the Fricke involution alone: (trace(1) + sign * trace(N)) / 2.
std::int64_t dim_global(std::int64_t k, std::int64_t N, int sign, Space space,
                        const HurwitzTable& table);
// All 2^omega sign-pattern dimensions in canonical order, computing each
// trace(Q) once.
std::vector<std::pair<SignPattern, std::int64_t>> dim_sigma_all(std::int64_t k, std::int64_t N,
                                                                Space space,
                                                                const HurwitzTable& table);

}  // namespace alsp
