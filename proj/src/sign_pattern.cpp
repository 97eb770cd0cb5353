#include "alsp/sign_pattern.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "alsp/arith.hpp"

namespace alsp {

namespace {

std::vector<std::int64_t> maximal_prime_powers(std::int64_t level) {
  std::vector<std::int64_t> pps;
  for (const auto& pp : Factorization::of(level).entries()) {
    std::int64_t q = 1;
    for (int i = 0; i < pp.exponent; ++i) q *= pp.prime;
    pps.push_back(q);  // ascending by prime already
  }
  return pps;
}

}  // namespace

SignPattern SignPattern::trivial(std::int64_t level) {
  SignPattern s;
  s.level_ = level;
  for (std::int64_t q : maximal_prime_powers(level)) s.signs_.emplace_back(q, +1);
  return s;
}

SignPattern SignPattern::parse(std::int64_t level, std::string_view text) {
  SignPattern s = trivial(level);
  std::vector<bool> seen(s.signs_.size(), false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    pos = comma + 1;
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos || colon + 2 != item.size() ||
        (item[colon + 1] != '+' && item[colon + 1] != '-'))
      throw std::invalid_argument("sign pattern: expected '<primepower>:<+|->', got '" +
                                  std::string(item) + "'");
    std::int64_t q = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + colon, q);
    if (ec != std::errc{} || ptr != item.data() + colon)
      throw std::invalid_argument("sign pattern: bad prime power in '" + std::string(item) + "'");
    const auto it = std::find_if(s.signs_.begin(), s.signs_.end(),
                                 [q](const auto& e) { return e.first == q; });
    if (it == s.signs_.end())
      throw std::invalid_argument("sign pattern: " + std::to_string(q) +
                                  " is not a maximal prime power of level " +
                                  std::to_string(level));
    const std::size_t idx = (std::size_t)(it - s.signs_.begin());
    if (seen[idx])
      throw std::invalid_argument("sign pattern: duplicate entry for " + std::to_string(q));
    seen[idx] = true;
    it->second = item[colon + 1] == '+' ? +1 : -1;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("sign pattern: must assign a sign to every maximal prime power of level " +
                                std::to_string(level));
  return s;
}

std::int64_t SignPattern::count(std::int64_t level) {
  return std::int64_t{1} << Factorization::of(level).omega();
}

std::vector<SignPattern> SignPattern::all(std::int64_t level) {
  const SignPattern base = trivial(level);
  const std::size_t w = base.signs_.size();
  std::vector<SignPattern> out;
  out.reserve((std::size_t)1 << w);
  for (std::int64_t idx = 0; idx < (std::int64_t{1} << w); ++idx) {
    SignPattern s = base;
    for (std::size_t j = 0; j < w; ++j)
      s.signs_[j].second = (idx >> (w - 1 - j)) & 1 ? -1 : +1;
    out.push_back(std::move(s));
  }
  return out;
}

int SignPattern::operator()(std::int64_t Q) const {
  if (!exactly_divides(Q, level_))
    throw std::invalid_argument("sign pattern: " + std::to_string(Q) +
                                " is not an exact divisor of level " + std::to_string(level_));
  int sign = 1;
  for (const auto& [q, s] : signs_)
    if (Q % q == 0) sign *= s;
  return sign;
}

int SignPattern::global_sign() const { return (*this)(level_); }

std::int64_t SignPattern::index() const {
  std::int64_t idx = 0;
  for (const auto& [q, s] : signs_) idx = (idx << 1) | (s < 0 ? 1 : 0);
  return idx;
}

bool SignPattern::admissible(Space space) const {
  if (space != Space::newspace) return true;
  for (const auto& [q, s] : signs_)
    if (q == 4 && s > 0) return false;
  return true;
}

std::string SignPattern::str() const {
  std::string out;
  for (const auto& [q, s] : signs_) {
    if (!out.empty()) out += ',';
    out += std::to_string(q);
    out += ':';
    out += s > 0 ? '+' : '-';
  }
  return out;
}

}  // namespace alsp
