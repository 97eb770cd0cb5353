#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alsp {

enum class Space { full, newspace };

inline const char* space_name(Space s) { return s == Space::full ? "full" : "new"; }

// Atkin-Lehner sign pattern on a level: one sign per maximal prime power
// Q = p^r || N.  The pattern extends multiplicatively to every exact divisor.
class SignPattern {
 public:
  // All signs +1.
  static SignPattern trivial(std::int64_t level);

  // Text form "<p^r>:<+|->" comma-joined, e.g. "4:+,5:-" for level 20.
  // Entries may come in any order but must cover the maximal prime powers of
  // the level exactly once.  Level 1 takes the empty string.
  static SignPattern parse(std::int64_t level, std::string_view text);

  // The 2^omega patterns, ordered lexicographically ('+' before '-') with the
  // smallest prime varying slowest.  all(level)[i].index() == i.
  static std::vector<SignPattern> all(std::int64_t level);
  static std::int64_t count(std::int64_t level);

  std::int64_t level() const { return level_; }
  // (maximal prime power, sign) ascending by prime.
  const std::vector<std::pair<std::int64_t, int>>& entries() const { return signs_; }

  // Evaluate at an exact divisor Q || level.
  int operator()(std::int64_t Q) const;
  int global_sign() const;  // value at Q = level (the Fricke involution)
  std::int64_t index() const;

  // The one excluded case: newspace, 4 || level, sign(4) = +1 (that subspace
  // is forced to vanish, so statistics over it are meaningless).
  bool admissible(Space space) const;

  std::string str() const;

  bool operator==(const SignPattern&) const = default;

 private:
  std::int64_t level_ = 1;
  std::vector<std::pair<std::int64_t, int>> signs_;
};

}  // namespace alsp
