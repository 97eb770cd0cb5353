#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace alsp {

// All trace arithmetic is exact until the final reporting boundary.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Canonical text form: "num" when the denominator is 1, else "num/den".
inline std::string rat_str(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_pow(std::int64_t base, unsigned long e) { return int_pow(Int((long)base), e); }

// Exact value required to fit; used where the math guarantees an integer.
inline std::int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("alsp: integer out of int64 range");
  return v.get_si();
}

inline std::int64_t to_int64(const Rat& q) {
  if (!is_integer(q)) throw std::logic_error("alsp: expected integral rational, got " + rat_str(q));
  return to_int64(Int(q.get_num()));
}

}  // namespace alsp
