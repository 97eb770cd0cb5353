// Command-line front end.  Talks to the engine exclusively through the C
// library surface (alsp.h); owns argument parsing, the Hurwitz cache file
// lifecycle, and the table/CSV/JSON renderers.
//
// Exit codes: 0 success, 1 verification/assertion/runtime failure, 2 usage.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "alsp.h"

namespace {

// ---- small utilities -----------------------------------------------------

struct CStr {
  char* p = nullptr;
  ~CStr() { alsp_free(p); }
};

struct Table {
  alsp_table* t = nullptr;
  ~Table() { alsp_table_free(t); }
};

int report_fail(alsp_status st) {
  std::fprintf(stderr, "error: %s (%s)\n", alsp_last_error(), alsp_status_name(st));
  return st == ALSP_E_INVALID ? 2 : 1;
}

int usage_fail(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return 2;
}

// Fixed 12-significant-digit float form shared by every renderer so table,
// CSV and JSON can never disagree.
std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if ((unsigned char)c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }
std::string jnum(double x) { return std::isnan(x) ? "null" : fmt12(x); }

// "a", "lo-hi" or "lo-hi:step", comma-joined; every value must satisfy
// minimum <= v.  Negative bounds are not a use case for levels/weights.
bool parse_int_list(const std::string& text, std::int64_t minimum, std::vector<std::int64_t>* out,
                    std::string* err) {
  out->clear();
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (item.empty()) {
      *err = "empty item in list '" + text + "'";
      return false;
    }
    std::int64_t lo = 0, hi = 0, step = 1;
    size_t dash = item.find('-', 1);  // allow no leading '-'; values are positive anyway
    try {
      if (dash == std::string::npos) {
        lo = hi = std::stoll(item);
      } else {
        lo = std::stoll(item.substr(0, dash));
        std::string rest = item.substr(dash + 1);
        size_t colon = rest.find(':');
        hi = std::stoll(rest.substr(0, colon));
        if (colon != std::string::npos) step = std::stoll(rest.substr(colon + 1));
      }
    } catch (const std::exception&) {
      *err = "cannot parse list item '" + item + "'";
      return false;
    }
    if (step < 1 || lo > hi) {
      *err = "bad span '" + item + "' (need lo <= hi, step >= 1)";
      return false;
    }
    for (std::int64_t v = lo; v <= hi; v += step) {
      if (v < minimum) {
        *err = "value " + std::to_string(v) + " below minimum " + std::to_string(minimum);
        return false;
      }
      out->push_back(v);
    }
  }
  if (out->empty()) {
    *err = "empty list";
    return false;
  }
  return true;
}

// ---- plain-text table renderer --------------------------------------------

struct TextTable {
  std::vector<std::string> header;
  std::vector<bool> left;  // alignment per column
  std::vector<std::vector<std::string>> rows;

  void print() const {
    std::vector<size_t> width(header.size());
    for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
      for (size_t c = 0; c < row.size(); ++c)
        if (row[c].size() > width[c]) width[c] = row[c].size();
    auto line = [&](const std::vector<std::string>& row) {
      std::string out;
      for (size_t c = 0; c < row.size(); ++c) {
        if (c) out += "  ";
        int w = (int)width[c];
        char buf[512];
        std::snprintf(buf, sizeof buf, left[c] ? "%-*s" : "%*s", w, row[c].c_str());
        out += buf;
      }
      while (!out.empty() && out.back() == ' ') out.pop_back();
      std::printf("%s\n", out.c_str());
    };
    line(header);
    for (const auto& row : rows) line(row);
  }

  void print_csv() const {
    auto line = [](const std::vector<std::string>& row) {
      std::string out;
      for (size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += row[c];
      }
      std::printf("%s\n", out.c_str());
    };
    line(header);
    for (const auto& row : rows) line(row);
  }
};

// ---- Hurwitz cache acquisition ---------------------------------------------

// Load-or-build a table covering `need`.  With a path: valid file that covers
// the need is used as-is; a valid-but-short file is rebuilt and written back;
// a missing file is created; a corrupt file is a hard error (never silently
// clobbered).  Without a path the table is built in memory.
int acquire_table(std::int64_t need, const std::string& cache_path, Table* out) {
  if (need < 0) need = 0;
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    alsp_status st = alsp_table_load(cache_path.c_str(), &out->t);
    if (st != ALSP_OK) return report_fail(st);
    if (alsp_table_max(out->t) >= need) return 0;
    alsp_table_free(out->t);
    out->t = nullptr;
  }
  alsp_status st = alsp_table_build(need, &out->t);
  if (st != ALSP_OK) return report_fail(st);
  if (!cache_path.empty()) {
    st = alsp_table_save(out->t, cache_path.c_str());
    if (st != ALSP_OK)
      std::fprintf(stderr, "warning: could not write cache %s: %s\n", cache_path.c_str(),
                   alsp_last_error());
  }
  return 0;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  __int128 r = (__int128)a * b;
  if (r > (__int128)4e18) return -1;
  return (std::int64_t)r;
}

// ---- shared option state ----------------------------------------------------

struct Options {
  // dim / trace
  std::int64_t N = 1, k = 2, m = 1, Q = 1;
  std::string space = "full";
  std::string sigma;
  bool sigma_set = false;
  bool all_sigmas = false;
  // verify
  std::string suite;
  std::int64_t max_n = -1, max_k = -1;
  // equid
  std::int64_t p = 2;
  std::string levels_text, weights_text;
  int equid_n_max = 6;
  bool trend = false;
  // cache
  std::int64_t cache_max = 0;
  std::string cache_out, cache_check_path;
  // common
  std::string format = "table";
  std::string cache;
  int jobs = 0;
};

int space_code(const std::string& s) { return s == "new" ? ALSP_SPACE_NEW : ALSP_SPACE_FULL; }

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

// ---- dim ---------------------------------------------------------------------

int run_dim(const Options& opt) {
  Table table;
  if (int rc = acquire_table(checked_mul(4, opt.N), opt.cache, &table)) return rc;
  const int space = space_code(opt.space);

  std::int64_t space_dim = 0;
  alsp_status st = alsp_dim(table.t, opt.k, opt.N, space, &space_dim);
  if (st != ALSP_OK) return report_fail(st);

  if (!opt.sigma_set && !opt.all_sigmas) {
    if (opt.format == "json") {
      std::printf("{\"config\":{\"cmd\":\"dim\",\"N\":%" PRId64 ",\"k\":%" PRId64
                  ",\"space\":%s,\"sigma\":null},"
                  "\"rows\":[{\"dim\":%" PRId64 "}],\"summary\":{\"space_dim\":%" PRId64 "}}\n",
                  opt.N, opt.k, jstr(opt.space).c_str(), space_dim, space_dim);
    } else if (opt.format == "csv") {
      std::printf("N,k,space,dim\n%" PRId64 ",%" PRId64 ",%s,%" PRId64 "\n", opt.N, opt.k,
                  opt.space.c_str(), space_dim);
    } else {
      std::printf("dim S_%" PRId64 "%s(%" PRId64 ") = %" PRId64 "\n", opt.k,
                  space == ALSP_SPACE_NEW ? "^new" : "", opt.N, space_dim);
    }
    return 0;
  }

  // One row per requested pattern.
  struct Row {
    std::string sigma;
    std::int64_t dim;
    std::string exact;
    double share, predicted, residual;
  };
  std::vector<Row> rows;
  std::vector<std::string> names;
  if (opt.all_sigmas) {
    std::int64_t count = alsp_sigma_count(opt.N);
    if (count < 0) return report_fail(ALSP_E_INVALID);
    for (std::int64_t i = 0; i < count; ++i) {
      char buf[256];
      st = alsp_sigma_name(opt.N, i, buf, sizeof buf);
      if (st != ALSP_OK) return report_fail(st);
      names.emplace_back(buf);
    }
  } else {
    names.push_back(opt.sigma);
  }
  std::int64_t sum = 0;
  for (const std::string& name : names) {
    Row r;
    r.sigma = name;
    st = alsp_dim_sigma(table.t, opt.k, opt.N, name.c_str(), space, &r.dim);
    if (st != ALSP_OK) return report_fail(st);
    CStr exact;
    double predicted = 0;
    st = alsp_proportion_sigma(opt.N, name.c_str(), space, &exact.p, &predicted);
    if (st != ALSP_OK) return report_fail(st);
    r.exact = exact.p;
    r.share = space_dim > 0 ? (double)r.dim / (double)space_dim : std::nan("");
    r.predicted = predicted;
    r.residual = r.share - predicted;
    sum += r.dim;
    rows.push_back(std::move(r));
  }

  if (opt.format == "json") {
    std::string out = "{\"config\":{\"cmd\":\"dim\",\"N\":" + std::to_string(opt.N) +
                      ",\"k\":" + std::to_string(opt.k) + ",\"space\":" + jstr(opt.space) +
                      ",\"sigma\":" + (opt.all_sigmas ? std::string("\"all\"") : jstr(opt.sigma)) +
                      "},\"rows\":[";
    for (size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      if (i) out += ',';
      out += "{\"sigma\":" + jstr(r.sigma) + ",\"dim\":" + std::to_string(r.dim) +
             ",\"space_dim\":" + std::to_string(space_dim) + ",\"share\":" + jnum(r.share) +
             ",\"predicted\":" + jnum(r.predicted) + ",\"predicted_exact\":" + jstr(r.exact) +
             ",\"residual\":" + jnum(r.residual) + "}";
    }
    out += "],\"summary\":{\"space_dim\":" + std::to_string(space_dim) +
           ",\"sigma_dim_sum\":" + std::to_string(sum) + "}}";
    std::printf("%s\n", out.c_str());
  } else {
    TextTable t;
    t.header = {"N", "k", "space", "sigma", "dim", "space_dim", "share", "predicted", "residual"};
    t.left = {false, false, true, true, false, false, false, false, false};
    for (const Row& r : rows)
      t.rows.push_back({std::to_string(opt.N), std::to_string(opt.k), opt.space, r.sigma,
                        std::to_string(r.dim), std::to_string(space_dim), fmt12(r.share),
                        fmt12(r.predicted), fmt12(r.residual)});
    if (opt.format == "csv") {
      t.print_csv();
    } else {
      t.print();
      std::printf("space_dim = %" PRId64 ", sum over sigma = %" PRId64 "\n", space_dim, sum);
    }
  }
  return 0;
}

// ---- trace ---------------------------------------------------------------------

int run_trace(const Options& opt) {
  std::int64_t need = checked_mul(4, checked_mul(opt.m, opt.sigma_set ? opt.N : opt.Q));
  if (need < 0) return usage_fail("m*Q too large for the class-number table");
  Table table;
  if (int rc = acquire_table(need, opt.cache, &table)) return rc;
  const int space = space_code(opt.space);

  CStr exact;
  alsp_trace_stats stats{};
  alsp_status st;
  if (opt.sigma_set)
    st = alsp_trace_sigma(table.t, opt.k, opt.N, opt.m, opt.sigma.c_str(), space, &exact.p,
                          &stats);
  else
    st = alsp_trace_q(table.t, opt.k, opt.N, opt.m, opt.Q, space, &exact.p, &stats);
  if (st != ALSP_OK) return report_fail(st);

  std::string q_cell = opt.sigma_set ? "" : std::to_string(opt.Q);
  std::string sigma_cell = opt.sigma_set ? opt.sigma : "";
  if (opt.format == "json") {
    std::string out = "{\"config\":{\"cmd\":\"trace\",\"N\":" + std::to_string(opt.N) +
                      ",\"k\":" + std::to_string(opt.k) + ",\"m\":" + std::to_string(opt.m) +
                      (opt.sigma_set ? ",\"sigma\":" + jstr(opt.sigma)
                                     : ",\"Q\":" + std::to_string(opt.Q)) +
                      ",\"space\":" + jstr(opt.space) + "},\"rows\":[{\"exact\":" +
                      jstr(exact.p) + ",\"normalized\":" + jnum(stats.normalized) +
                      ",\"predicted\":" + jnum(stats.predicted) +
                      ",\"residual\":" + jnum(stats.residual) + "}],\"summary\":{\"rows\":1}}";
    std::printf("%s\n", out.c_str());
  } else {
    TextTable t;
    t.header = {"N", "k", "m", "Q", "sigma", "space", "exact", "normalized", "predicted",
                "residual"};
    t.left = {false, false, false, false, true, true, false, false, false, false};
    t.rows.push_back({std::to_string(opt.N), std::to_string(opt.k), std::to_string(opt.m), q_cell,
                      sigma_cell, opt.space, exact.p, fmt12(stats.normalized),
                      fmt12(stats.predicted), fmt12(stats.residual)});
    if (opt.format == "csv")
      t.print_csv();
    else
      t.print();
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------------

int run_verify(const Options& opt) {
  std::int64_t need = 0;
  alsp_status st = alsp_verify_table_need(opt.suite.c_str(), opt.max_n, opt.max_k, &need);
  if (st != ALSP_OK) return report_fail(st);
  Table table;
  if (int rc = acquire_table(need, opt.cache, &table)) return rc;

  CStr failures;
  alsp_verify_summary summary{};
  st = alsp_verify(table.t, opt.suite.c_str(), opt.max_n, opt.max_k, resolve_jobs(opt.jobs),
                   &failures.p, &summary);
  if (st != ALSP_OK) return report_fail(st);
  if (failures.p) std::printf("%s\n", failures.p);
  std::printf("verify %s: %" PRId64 " checks, %" PRId64 " failures\n", opt.suite.c_str(),
              summary.checks, summary.failures);
  return summary.failures == 0 ? 0 : 1;
}

// ---- equid ---------------------------------------------------------------------

int run_equid(const Options& opt) {
  std::string err;
  std::vector<std::int64_t> levels, weights;
  if (!parse_int_list(opt.levels_text, 1, &levels, &err)) return usage_fail("--N-list: " + err);
  if (!parse_int_list(opt.weights_text, 2, &weights, &err)) return usage_fail("--k-list: " + err);
  for (std::int64_t k : weights)
    if (k % 2) return usage_fail("weights must be even, got " + std::to_string(k));
  if (opt.equid_n_max < 0) return usage_fail("--max-n must be >= 0");

  std::int64_t max_level = 1, p_pow = 1;
  for (std::int64_t n : levels) max_level = std::max(max_level, n);
  for (int i = 0; i < opt.equid_n_max; ++i) {
    p_pow = checked_mul(p_pow, opt.p);
    if (p_pow < 0) return usage_fail("p^n overflows");
  }
  std::int64_t need = checked_mul(4, checked_mul(p_pow, max_level));
  if (need < 0 || need > (std::int64_t)2e9)
    return usage_fail("class-number table for this grid would exceed supported size");

  Table table;
  if (int rc = acquire_table(need, opt.cache, &table)) return rc;

  const int space = space_code(opt.space);
  alsp_equid_row* rows = nullptr;
  size_t nrows = 0;
  alsp_status st =
      alsp_equid(table.t, opt.p, levels.data(), levels.size(), weights.data(), weights.size(),
                 opt.sigma_set ? opt.sigma.c_str() : nullptr, space, opt.equid_n_max,
                 resolve_jobs(opt.jobs), &rows, &nrows);
  if (st != ALSP_OK) return report_fail(st);
  struct RowsGuard {
    alsp_equid_row* p;
    ~RowsGuard() { alsp_free(p); }
  } guard{rows};

  // Trend: per sign-choice (pattern index), max |deviation| per level must be
  // non-increasing as the level grows.  Pattern indices only line up when all
  // levels have the same number of prime factors.
  struct Trend {
    std::string label;
    std::vector<std::int64_t> trend_levels;
    std::vector<double> max_dev;
    bool monotone = true;
  };
  std::vector<Trend> trends;
  bool trend_ok = true;
  if (opt.trend) {
    std::int64_t count = opt.sigma_set ? 1 : alsp_sigma_count(levels[0]);
    if (!opt.sigma_set) {
      for (std::int64_t n : levels)
        if (alsp_sigma_count(n) != count)
          return usage_fail("--trend needs every level to have the same number of prime factors");
    }
    int omega = 0;
    while ((std::int64_t(1) << omega) < count) ++omega;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Trend tr;
      if (opt.sigma_set) {
        tr.label = opt.sigma;
      } else if (omega == 0) {
        tr.label = "(trivial)";
      } else {
        for (int j = 0; j < omega; ++j)
          tr.label += ((idx >> (omega - 1 - j)) & 1) ? '-' : '+';
      }
      for (std::int64_t N : levels) {
        double best = -1;
        for (size_t i = 0; i < nrows; ++i) {
          const alsp_equid_row& r = rows[i];
          if (r.N != N || r.flag != ALSP_ROW_OK) continue;
          if (!opt.sigma_set && r.sigma_index != idx) continue;
          best = std::max(best, std::fabs(r.deviation));
        }
        if (best >= 0) {
          tr.trend_levels.push_back(N);
          tr.max_dev.push_back(best);
        }
      }
      for (size_t i = 1; i < tr.max_dev.size(); ++i)
        if (tr.max_dev[i] > tr.max_dev[i - 1]) tr.monotone = false;
      trend_ok = trend_ok && tr.monotone;
      trends.push_back(std::move(tr));
    }
  }

  auto row_cells = [&](const alsp_equid_row& r) -> std::vector<std::string> {
    bool ok = r.flag == ALSP_ROW_OK;
    return {std::to_string(r.p),
            std::to_string(r.N),
            std::to_string(r.k),
            r.sigma,
            r.space == ALSP_SPACE_NEW ? "new" : "full",
            ok ? std::to_string(r.n) : "",
            ok ? fmt12(r.observed) : "",
            ok ? fmt12(r.target) : "",
            ok ? fmt12(r.deviation) : ""};
  };

  if (opt.format == "json") {
    std::string out = "{\"config\":{\"cmd\":\"equid\",\"p\":" + std::to_string(opt.p) +
                      ",\"levels\":[";
    for (size_t i = 0; i < levels.size(); ++i)
      out += (i ? "," : "") + std::to_string(levels[i]);
    out += "],\"weights\":[";
    for (size_t i = 0; i < weights.size(); ++i)
      out += (i ? "," : "") + std::to_string(weights[i]);
    out += "],\"space\":" + jstr(opt.space) +
           ",\"sigma\":" + (opt.sigma_set ? jstr(opt.sigma) : std::string("null")) +
           ",\"max_n\":" + std::to_string(opt.equid_n_max) +
           ",\"trend\":" + (opt.trend ? "true" : "false") + "},\"rows\":[";
    size_t flagged = 0;
    double max_dev = std::nan("");
    for (size_t i = 0; i < nrows; ++i) {
      const alsp_equid_row& r = rows[i];
      bool ok = r.flag == ALSP_ROW_OK;
      if (!ok) ++flagged;
      if (ok && (std::isnan(max_dev) || std::fabs(r.deviation) > max_dev))
        max_dev = std::fabs(r.deviation);
      if (i) out += ',';
      out += "{\"p\":" + std::to_string(r.p) + ",\"N\":" + std::to_string(r.N) +
             ",\"k\":" + std::to_string(r.k) + ",\"sigma\":" + jstr(r.sigma) +
             ",\"space\":" + jstr(r.space == ALSP_SPACE_NEW ? "new" : "full") +
             ",\"n\":" + (ok ? std::to_string(r.n) : std::string("null")) +
             ",\"flag\":" + jstr(alsp_row_flag_name(r.flag)) +
             ",\"observed\":" + (ok ? jnum(r.observed) : std::string("null")) +
             ",\"target\":" + (ok ? jnum(r.target) : std::string("null")) +
             ",\"deviation\":" + (ok ? jnum(r.deviation) : std::string("null")) + "}";
    }
    out += "],\"summary\":{\"rows\":" + std::to_string(nrows) +
           ",\"flagged\":" + std::to_string(flagged) + ",\"max_abs_deviation\":" + jnum(max_dev);
    if (opt.trend) {
      out += ",\"trend\":[";
      for (size_t i = 0; i < trends.size(); ++i) {
        const Trend& tr = trends[i];
        if (i) out += ',';
        out += "{\"sigma\":" + jstr(tr.label) + ",\"levels\":[";
        for (size_t j = 0; j < tr.trend_levels.size(); ++j)
          out += (j ? "," : "") + std::to_string(tr.trend_levels[j]);
        out += "],\"max_deviation\":[";
        for (size_t j = 0; j < tr.max_dev.size(); ++j)
          out += (j ? "," : "") + fmt12(tr.max_dev[j]);
        out += std::string("],\"monotone\":") + (tr.monotone ? "true" : "false") + "}";
      }
      out += "],\"trend_ok\":" + std::string(trend_ok ? "true" : "false");
    }
    out += "}}";
    std::printf("%s\n", out.c_str());
  } else {
    TextTable t;
    t.header = {"p", "N", "k", "sigma", "space", "n", "observed", "target", "deviation"};
    t.left = {false, false, false, true, true, false, false, false, false};
    if (opt.format == "table") t.header.push_back("flag"), t.left.push_back(true);
    for (size_t i = 0; i < nrows; ++i) {
      std::vector<std::string> cells = row_cells(rows[i]);
      if (opt.format == "table") cells.push_back(alsp_row_flag_name(rows[i].flag));
      t.rows.push_back(std::move(cells));
    }
    if (opt.format == "csv")
      t.print_csv();
    else
      t.print();
    // Keep machine CSV on stdout pure; the trend verdict goes to stderr there.
    FILE* dst = opt.format == "csv" ? stderr : stdout;
    if (opt.trend) {
      for (const Trend& tr : trends) {
        std::string seq;
        for (size_t j = 0; j < tr.max_dev.size(); ++j) {
          if (j) seq += " -> ";
          seq += fmt12(tr.max_dev[j]);
        }
        std::fprintf(dst, "trend sigma=%s: %s [%s]\n", tr.label.c_str(),
                     seq.empty() ? "(no data)" : seq.c_str(),
                     tr.monotone ? "non-increasing" : "VIOLATED");
      }
      std::fprintf(dst, "trend verdict: %s\n", trend_ok ? "ok" : "violated");
    }
  }
  return opt.trend && !trend_ok ? 1 : 0;
}

// ---- cache ---------------------------------------------------------------------

int run_cache_build(const Options& opt) {
  std::string path = !opt.cache_out.empty() ? opt.cache_out : opt.cache;
  if (path.empty()) return usage_fail("cache build needs --out (or --cache / ALSP_HURWITZ_CACHE)");
  if (std::filesystem::exists(path)) {
    Table existing;
    alsp_status st = alsp_table_load(path.c_str(), &existing.t);
    if (st != ALSP_OK) return report_fail(st);
    if (alsp_table_max(existing.t) >= opt.cache_max) {
      std::printf("cache ok: %s already covers %" PRId64 " (max %" PRId64 ")\n", path.c_str(),
                  opt.cache_max, alsp_table_max(existing.t));
      return 0;
    }
  }
  Table table;
  alsp_status st = alsp_table_build(opt.cache_max, &table.t);
  if (st != ALSP_OK) return report_fail(st);
  st = alsp_table_save(table.t, path.c_str());
  if (st != ALSP_OK) return report_fail(st);
  std::printf("cache built: %s max=%" PRId64 "\n", path.c_str(), alsp_table_max(table.t));
  return 0;
}

int run_cache_check(const Options& opt) {
  Table table;
  alsp_status st = alsp_table_load(opt.cache_check_path.c_str(), &table.t);
  if (st != ALSP_OK) return report_fail(st);
  std::printf("cache ok: %s max=%" PRId64 "\n", opt.cache_check_path.c_str(),
              alsp_table_max(table.t));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("ALSP_HURWITZ_CACHE")) opt.cache = env;

  CLI::App app{"Exact Atkin-Lehner twisted traces, sign-pattern dimensions, and p-adic "
               "Plancherel equidistribution reports"};
  app.require_subcommand(1);
  app.set_version_flag("--version", alsp_version());

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--cache", opt.cache,
                    "Hurwitz cache file (default from ALSP_HURWITZ_CACHE); created or extended "
                    "as needed");
  };

  CLI::App* dim = app.add_subcommand("dim", "Dimensions of cusp form spaces and sign-pattern "
                                            "eigenspaces");
  dim->add_option("--N", opt.N, "Level")->required()->check(CLI::PositiveNumber);
  dim->add_option("--k", opt.k, "Weight (even)")->required();
  dim->add_option("--space", opt.space, "full or new")->check(CLI::IsMember({"full", "new"}));
  CLI::Option* dim_sigma = dim->add_option("--sigma", opt.sigma, "Sign pattern, e.g. \"4:+,5:-\"");
  CLI::Option* dim_all = dim->add_flag("--all-sigmas", opt.all_sigmas, "All 2^omega patterns");
  dim_sigma->excludes(dim_all);
  add_common(dim);

  CLI::App* trace = app.add_subcommand("trace", "Exact trace of a Hecke operator composed with "
                                                "an Atkin-Lehner involution");
  trace->add_option("--N", opt.N, "Level")->required()->check(CLI::PositiveNumber);
  trace->add_option("--k", opt.k, "Weight (even)")->required();
  trace->add_option("--m", opt.m, "Hecke index, coprime to N")->check(CLI::PositiveNumber);
  CLI::Option* trace_q = trace->add_option("--Q", opt.Q, "Exact divisor of N");
  CLI::Option* trace_sigma =
      trace->add_option("--sigma", opt.sigma, "Sign pattern (trace on its eigenspace)");
  trace_sigma->excludes(trace_q);
  trace->add_option("--space", opt.space, "full or new")->check(CLI::IsMember({"full", "new"}));
  add_common(trace);

  CLI::App* verify = app.add_subcommand("verify", "Cross-check suites against independent "
                                                  "routes");
  verify->add_option("--suite", opt.suite, "identities|dimensions|newspace|w4|hurwitz|tau|bounds")
      ->required();
  verify->add_option("--max-N,--max", opt.max_n, "Range bound (suite-specific default)");
  verify->add_option("--max-k", opt.max_k, "Weight bound (suite-specific default)");
  verify->add_option("--jobs", opt.jobs, "Worker threads (default: hardware)");
  verify->add_option("--cache", opt.cache, "Hurwitz cache file");

  CLI::App* equid = app.add_subcommand("equid", "Chebyshev moments against the p-adic "
                                                "Plancherel measure");
  equid->add_option("--p", opt.p, "Prime")->required();
  equid->add_option("--N-list,--N", opt.levels_text, "Levels: a, lo-hi or lo-hi:step, "
                                                     "comma-joined")
      ->required();
  equid->add_option("--k-list,--k", opt.weights_text, "Even weights, same syntax")->required();
  equid->add_option("--max-n", opt.equid_n_max, "Largest Chebyshev degree");
  CLI::Option* equid_sigma =
      equid->add_option("--sigma", opt.sigma, "Single sign pattern (default: all)");
  equid->add_option("--space", opt.space, "full or new")->check(CLI::IsMember({"full", "new"}));
  equid->add_flag("--trend", opt.trend, "Check max |deviation| is non-increasing in the level");
  equid->add_option("--jobs", opt.jobs, "Worker threads (default: hardware)");
  add_common(equid);

  CLI::App* cache = app.add_subcommand("cache", "Hurwitz class-number cache management");
  cache->require_subcommand(1);
  CLI::App* cache_build = cache->add_subcommand("build", "Build or extend a cache file");
  cache_build->add_option("--max", opt.cache_max, "Largest index to cover")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cache_build->add_option("--out", opt.cache_out, "Cache path (default: --cache / env)");
  cache_build->add_option("--cache", opt.cache, "Fallback cache path");
  CLI::App* cache_check = cache->add_subcommand("check", "Validate an existing cache file");
  cache_check->add_option("path", opt.cache_check_path, "Cache file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  opt.sigma_set = (dim_sigma->count() > 0) || (trace_sigma->count() > 0) ||
                  (equid_sigma->count() > 0);

  if (app.got_subcommand(dim)) return run_dim(opt);
  if (app.got_subcommand(trace)) return run_trace(opt);
  if (app.got_subcommand(verify)) return run_verify(opt);
  if (app.got_subcommand(equid)) return run_equid(opt);
  if (app.got_subcommand(cache)) {
    if (cache->got_subcommand(cache_build)) return run_cache_build(opt);
    if (cache->got_subcommand(cache_check)) return run_cache_check(opt);
  }
  return 2;
}
