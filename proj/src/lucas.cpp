#include "alsp/lucas.hpp"

#include <stdexcept>
#include <utility>

namespace alsp {

Int lucas_even(std::int64_t k, std::int64_t u, std::int64_t m) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("lucas_even: k must be even and >= 2");
  if (m < 1) throw std::invalid_argument("lucas_even: m must be >= 1");
  if (u < 0) throw std::invalid_argument("lucas_even: u = t^2 must be >= 0");
  Int prev2(1);  // p_2
  if (k == 2) return prev2;
  Int prev1 = Int((long)u) - (long)m;  // p_4
  const Int step = Int((long)u) - 2 * (long)m;
  const Int m2 = Int((long)m) * (long)m;
  for (std::int64_t j = 6; j <= k; j += 2) {
    Int cur = step * prev1 - m2 * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

}  // namespace alsp
