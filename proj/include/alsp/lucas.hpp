#pragma once

#include <cstdint>

#include "alsp/rational.hpp"

namespace alsp {

// Gegenbauer-style Lucas value p_k(t, m): the coefficient of x^{k-2} in
// 1/(m x^2 - t x + 1).  For even k it is a polynomial in u = t^2, which is
// what the trace terms feed in (u = s^2/Q' stays integral even when t does
// not).  Two-step recurrence: p_2 = 1, p_4 = u - m,
// p_k = (u - 2m) p_{k-2} - m^2 p_{k-4}.
Int lucas_even(std::int64_t k, std::int64_t u, std::int64_t m);

}  // namespace alsp
