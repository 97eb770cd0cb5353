#include "alsp/classnum.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "alsp/arith.hpp"

namespace alsp {

HurwitzTable HurwitzTable::build(std::int64_t max_n) {
  if (max_n < 0) throw std::invalid_argument("HurwitzTable::build: max_n must be >= 0");
  HurwitzTable t;
  t.values_.assign((std::size_t)max_n + 1, 0);
  // Walk reduced forms (a, b, c), |b| <= a <= c, discriminant b^2 - 4ac = -n,
  // with b >= 0 enforced when |b| = a or a = c.  Enumerate b >= 0 and double
  // the weight when (a, -b, c) is a distinct reduced form.
  for (std::int64_t a = 1; 3 * a * a <= max_n; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) {
      std::int64_t n = 4 * a * a - b * b;  // c = a
      for (std::int64_t c = a; n <= max_n; ++c, n += 4 * a) {
        std::int64_t w;
        if (a == b && a == c)
          w = 4;  // 12 * 1/3
        else if (b == 0 && a == c)
          w = 6;  // 12 * 1/2
        else
          w = 12;
        if (b > 0 && b < a && c > a) w *= 2;
        t.values_[(std::size_t)n] += w;
      }
    }
  }
  t.values_[0] = -1;  // 12 * H(0) = -1
  return t;
}

std::int64_t HurwitzTable::twelve_h(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("HurwitzTable: n must be >= 0");
  if (n > max_n())
    throw TableRangeError("Hurwitz table covers n <= " + std::to_string(max_n()) +
                          " but H(" + std::to_string(n) + ") was requested");
  return values_[(std::size_t)n];
}

Rat HurwitzTable::hurwitz(std::int64_t n) const {
  Rat r(twelve_h(n), 12);
  r.canonicalize();
  return r;
}

void HurwitzTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "# alsp-hurwitz v1 max=" << max_n() << "\n";
  for (std::int64_t n = 0; n <= max_n(); ++n) out << n << "," << values_[(std::size_t)n] << "\n";
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
}

namespace {

std::int64_t parse_int(std::string_view s, std::int64_t line) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw CacheFormatError("cache: malformed integer '" + std::string(s) + "'", line);
  return v;
}

}  // namespace

HurwitzTable HurwitzTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  std::int64_t line_no = 1;
  if (!std::getline(in, line)) throw CacheFormatError("cache: missing header", line_no);
  const std::string_view magic = "# alsp-hurwitz v1 max=";
  if (line.rfind(magic, 0) != 0) throw CacheFormatError("cache: bad header", line_no);
  const std::int64_t max = parse_int(std::string_view(line).substr(magic.size()), line_no);
  if (max < 0) throw CacheFormatError("cache: negative max", line_no);

  HurwitzTable t;
  t.values_.assign((std::size_t)max + 1, 0);
  for (std::int64_t n = 0; n <= max; ++n) {
    ++line_no;
    if (!std::getline(in, line))
      throw CacheFormatError("cache: expected " + std::to_string(max + 1) + " rows", line_no);
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw CacheFormatError("cache: expected '<n>,<12H>'", line_no);
    const std::int64_t row_n = parse_int(std::string_view(line).substr(0, comma), line_no);
    const std::int64_t v = parse_int(std::string_view(line).substr(comma + 1), line_no);
    if (row_n != n) throw CacheFormatError("cache: rows out of order", line_no);
    if (n == 0 && v != -1) throw CacheFormatError("cache: H(0) sentinel must be -1", line_no);
    if (n > 0 && (n % 4 == 1 || n % 4 == 2) && v != 0)
      throw CacheFormatError("cache: H(n) must vanish for n = 1, 2 mod 4", line_no);
    if (n > 0 && v < 0) throw CacheFormatError("cache: negative class number", line_no);
    t.values_[(std::size_t)n] = v;
  }
  ++line_no;
  if (std::getline(in, line) && !line.empty())
    throw CacheFormatError("cache: trailing data", line_no);
  return t;
}

Rat level_hurwitz(std::int64_t N, std::int64_t delta, const HurwitzTable& table) {
  if (N < 1) throw std::invalid_argument("level_hurwitz: level must be >= 1");
  if (delta > 0) throw std::invalid_argument("level_hurwitz: Delta must be <= 0");
  const std::int64_t g = gcd0(N, delta);  // = N at Delta = 0
  const std::int64_t a = big_B(g);
  const std::int64_t b = g / (a * a);
  const std::int64_t a2b2 = a * a * b * b;
  if (delta % a2b2 != 0) return Rat(0);
  const std::int64_t d = delta / a2b2;
  const int chi = kronecker(d, N / (a * a * b));
  if (chi == 0) return Rat(0);
  return Rat(chi * a * a * b) * table.hurwitz(-d);
}

}  // namespace alsp
