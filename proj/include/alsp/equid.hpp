#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alsp/classnum.hpp"
#include "alsp/sign_pattern.hpp"

namespace alsp {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RowFlag { ok = 0, p_divides_level = 1, zero_dim = 2, inadmissible = 3 };
const char* row_flag_name(RowFlag f);

// One grid cell of an equidistribution report.  Flagged rows carry n = -1 and
// NaN in the numeric columns; they mark cells that were skipped, not errors.
struct EquidRow {
  std::int64_t p = 2;
  std::int64_t N = 1;
  std::int64_t k = 2;
  std::int64_t sigma_index = 0;
  std::string sigma;
  Space space = Space::full;
  int n = 0;
  RowFlag flag = RowFlag::ok;
  double observed = 0;
  double target = 0;
  double deviation = 0;
};

// Moment of the n-th normalized Chebyshev polynomial X_n (X_n(2cos t) =
// sin((n+1)t)/sin t) against the p-adic Plancherel measure: p^{-n/2} for even
// n, 0 for odd.
double target_moment(std::int64_t p, int n);

// Same moment by adaptive quadrature of the density
// (p+1)/pi * sqrt(1 - x^2/4) / ((p^{1/2} + p^{-1/2})^2 - x^2) on [-2, 2];
// independent numeric route for testing the closed form.
double plancherel_moment(std::int64_t p, int n, double abs_tol = 1e-10);

// Empirical moment: trace of T'_{p^n} on the sigma eigenspace divided by its
// dimension, evaluated with exact integer numerator and p-power denominator.
double chebyshev_moment(std::int64_t k, std::int64_t N, const SignPattern& sigma, Space space,
                        std::int64_t p, int n, const HurwitzTable& table);

// Full grid sweep: rows ordered by (N, k, sigma index, n).  sigma_text
// restricts to one pattern (only sensible when all levels share a factor
// shape); nullopt enumerates all patterns per level.
std::vector<EquidRow> equid_report(std::vector<std::int64_t> levels,
                                   std::vector<std::int64_t> weights, std::int64_t p, int n_max,
                                   const std::optional<std::string>& sigma_text, Space space,
                                   const HurwitzTable& table, int jobs = 1);

}  // namespace alsp
