#pragma once

#include <cstdint>
#include <vector>

#include "alsp/rational.hpp"

namespace alsp {

// Independent reference routes used to check the trace engine.  Nothing here
// touches the trace or class-number tables: dimensions come from the classical
// genus/elliptic-point/cusp formula, class numbers from a second form
// enumeration with a different loop structure, tau from the eta-product
// q-expansion.

std::int64_t genus_x0(std::int64_t N);

// dim S_k(Gamma_0(N)) for even k >= 2 (genus for k = 2, the standard
// (k-1)(g-1) + cusp/elliptic corrections for k >= 4).
std::int64_t dim_classical(std::int64_t N, std::int64_t k);

// Newspace dimension by Moebius inversion (mu*mu against dim_classical).
std::int64_t dim_new_inversion(std::int64_t N, std::int64_t k);

// Hurwitz class number H(n) enumerated per-n over divisor pairs.
Rat hurwitz_bruteforce(std::int64_t n);

// tau(1..n_max) from q prod (1-q^j)^24; index 0 unused.
std::vector<Int> delta_tau(std::int64_t n_max);

// Genus of X_0(N)/W_N for squarefree N > 3, via Riemann-Hurwitz with the
// Fricke fixed-point count H(4N).
std::int64_t fricke_quotient_genus(std::int64_t N);

}  // namespace alsp
