#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "alsp/rational.hpp"

namespace alsp {

// A trace evaluation needed a class number beyond the precomputed range.
struct TableRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cache file failed validation; `line` is 1-based.
struct CacheFormatError : std::runtime_error {
  CacheFormatError(const std::string& what, std::int64_t line_no)
      : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  std::int64_t line;
};

// Hurwitz class numbers H(0..max_n), stored as the integers 12*H(n).
// H(0) = -1/12; H(n) = 0 for n = 1, 2 mod 4; otherwise the weighted count of
// reduced positive binary quadratic forms of discriminant -n (weight 1/3 for
// forms proportional to x^2+xy+y^2, 1/2 for x^2+y^2, else 1).
class HurwitzTable {
 public:
  static HurwitzTable build(std::int64_t max_n);
  static HurwitzTable load(const std::string& path);
  void save(const std::string& path) const;

  std::int64_t max_n() const { return (std::int64_t)values_.size() - 1; }
  std::int64_t twelve_h(std::int64_t n) const;
  Rat hurwitz(std::int64_t n) const;

 private:
  std::vector<std::int64_t> values_;
};

// Level-twisted Hurwitz class number H_N(Delta), Delta <= 0: with
// (N, Delta) = a^2 b, b squarefree, this is a^2 b (Delta/(a^2 b^2) | N/(a^2 b)) H(|Delta|/(a^2 b^2))
// when a^2 b^2 divides Delta, else 0.
Rat level_hurwitz(std::int64_t N, std::int64_t delta, const HurwitzTable& table);

}  // namespace alsp
