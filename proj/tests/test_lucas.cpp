#include <stdexcept>
#include <vector>

#include "alsp/lucas.hpp"
#include "alsp/rational.hpp"
#include "doctest.h"

using namespace alsp;

TEST_SUITE_BEGIN("lucas");

namespace {

// Independent route: p_k(t, m) is the x^{k-2} coefficient of 1/(m x^2 - t x + 1),
// i.e. c_0 = 1, c_1 = t, c_j = t c_{j-1} - m c_{j-2}.  Evaluated at integer t.
Int series_coefficient(std::int64_t k, std::int64_t t, std::int64_t m) {
  Int prev(1), cur((long)t);
  if (k == 2) return prev;
  for (std::int64_t j = 2; j <= k - 2; ++j) {
    Int next = t * cur - m * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST_CASE("base cases") {
  CHECK(lucas_even(2, 0, 1) == 1);
  CHECK(lucas_even(2, 17, 5) == 1);
  CHECK(lucas_even(4, 9, 2) == 7);   // u - m
  CHECK(lucas_even(4, 0, 3) == -3);
}

TEST_CASE("matches the generating-function recurrence at t^2 = u") {
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t t = 0; t <= 10; ++t)
      for (std::int64_t k = 2; k <= 40; k += 2)
        CHECK_MESSAGE(lucas_even(k, t * t, m) == series_coefficient(k, t, m),
                      "k=", k, " t=", t, " m=", m);
}

TEST_CASE("degenerate value at u = 4m") {
  for (std::int64_t m = 1; m <= 9; ++m)
    for (std::int64_t k = 2; k <= 60; k += 2)
      CHECK(lucas_even(k, 4 * m, m) == (k - 1) * int_pow(m, (unsigned long)(k - 2) / 2));
}

TEST_CASE("boundedness on the elliptic range: p_k^2 (4m - u) <= 4 m^{k-1}") {
  for (std::int64_t m = 1; m <= 9; ++m)
    for (std::int64_t k = 2; k <= 24; k += 2)
      for (std::int64_t u = 0; u <= 4 * m; ++u) {
        const Int p = lucas_even(k, u, m);
        CHECK(p * p * (4 * m - u) <= 4 * int_pow(m, (unsigned long)(k - 1)));
      }
}

TEST_CASE("sign alternation at u = 0 for m = 1") {
  // p_k(0, 1) cycles 1, -1, -1, 1 in k/2; in particular p_12(0,1) = -1.
  CHECK(lucas_even(12, 0, 1) == -1);
  CHECK(lucas_even(12, 1, 1) == -1);
  CHECK(lucas_even(12, 4, 1) == 11);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(lucas_even(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lucas_even(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lucas_even(4, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(lucas_even(4, 0, 0), std::invalid_argument);
}

TEST_SUITE_END();
