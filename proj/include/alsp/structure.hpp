#pragma once

#include <cstdint>
#include <utility>

#include "alsp/rational.hpp"
#include "alsp/sign_pattern.hpp"

namespace alsp {

// Index of Gamma_0(N): psi(p^r) = p^r (1 + 1/p).
std::int64_t psi(std::int64_t N);

// Newspace analogue: psi_new(p^r) = p^r (1 - 1/p - [r>=2]/p^2 + [r>=3]/p^3).
std::int64_t psi_new(std::int64_t N);

// Fricke/AL main-term weight: eta(p^r) = -[r==2] / (p^2 - p - 1),
// multiplicative, eta(1) = 1.  Supported exactly on cubefree squares.
Rat eta(std::int64_t Q);

// Newform level-raising coefficients: alpha(p) = alpha(p^2) = -1,
// alpha(p^3) = +1, alpha(p^r) = 0 for r >= 4; multiplicative.
int alpha(std::int64_t n);

// theta_M(d) = d / (M, d).
std::int64_t theta(std::int64_t M, std::int64_t d);

bool cubefree_square(std::int64_t N);

// Divisor-sum identities behind the main-term bookkeeping; brute-forced here
// so sweeps can confirm them wholesale.
std::int64_t sum_mu(std::int64_t N, std::int64_t Q);     // over N'|N, N/N' squarefree
std::int64_t sum_alpha(std::int64_t N, std::int64_t Q);  // over all N'|N
bool check_sum_mu(std::int64_t N, std::int64_t Q);       // == psi(N) [Q = 1]
bool check_sum_alpha(std::int64_t N, std::int64_t Q);    // == psi_new(N) eta(Q)

// prod over p^r || N of (1 + sigma(p^r) eta(p^r)).
Rat sigma_factor(const SignPattern& sigma);

// Every admissible sigma_factor over every level lands in this window
// (closed-form extremal products over the primes).
std::pair<double, double> sigma_factor_bounds();
bool sigma_factor_within_bounds(const Rat& factor);

// Main term of the normalized trace (exact; zero when m is not a square).
Rat main_term_q(std::int64_t k, std::int64_t N, std::int64_t m, std::int64_t Q, Space space);
Rat main_term_sigma(std::int64_t k, std::int64_t N, std::int64_t m, const SignPattern& sigma,
                    Space space);

// Limiting dimension proportions.
Rat proportion_sigma(std::int64_t N, const SignPattern& sigma, Space space);
Rat proportion_global(std::int64_t N, int sign, Space space);

}  // namespace alsp
