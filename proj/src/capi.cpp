#include "alsp.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "alsp/classnum.hpp"
#include "alsp/equid.hpp"
#include "alsp/rational.hpp"
#include "alsp/sign_pattern.hpp"
#include "alsp/structure.hpp"
#include "alsp/trace.hpp"
#include "alsp/verify.hpp"

extern "C" struct alsp_table {
  alsp::HurwitzTable impl;
};

namespace {

thread_local std::string g_last_error;

// Everything crosses the boundary through here so an exception can never
// escape into C callers.
template <typename Fn>
alsp_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ALSP_OK;
  } catch (const alsp::TableRangeError& e) {
    g_last_error = e.what();
    return ALSP_E_RANGE;
  } catch (const alsp::CacheFormatError& e) {
    g_last_error = e.what();
    return ALSP_E_FORMAT;
  } catch (const alsp::IoError& e) {
    g_last_error = e.what();
    return ALSP_E_IO;
  } catch (const alsp::QuadratureError& e) {
    g_last_error = e.what();
    return ALSP_E_NOCONV;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return ALSP_E_INVALID;
  } catch (const alsp::ExactnessError& e) {
    g_last_error = e.what();
    return ALSP_E_ASSERT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ALSP_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return ALSP_E_INTERNAL;
  }
}

alsp_status fail_invalid(const char* msg) {
  g_last_error = msg;
  return ALSP_E_INVALID;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

alsp::Space to_space(int space) {
  if (space == ALSP_SPACE_FULL) return alsp::Space::full;
  if (space == ALSP_SPACE_NEW) return alsp::Space::newspace;
  throw std::invalid_argument("space must be ALSP_SPACE_FULL or ALSP_SPACE_NEW");
}

void fill_stats(alsp_trace_stats* stats, const alsp::TraceReport& r) {
  if (!stats) return;
  stats->normalized = r.normalized;
  stats->predicted = r.predicted;
  stats->residual = r.residual;
}

std::string rat_pair(const alsp::Rat& r, double* value) {
  if (value) *value = r.get_d();
  return alsp::rat_str(r);
}

}  // namespace

extern "C" {

const char* alsp_status_name(alsp_status s) {
  switch (s) {
    case ALSP_OK: return "ok";
    case ALSP_E_INVALID: return "invalid-argument";
    case ALSP_E_RANGE: return "table-range";
    case ALSP_E_IO: return "io";
    case ALSP_E_FORMAT: return "cache-format";
    case ALSP_E_ASSERT: return "exactness";
    case ALSP_E_NOCONV: return "no-convergence";
    case ALSP_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* alsp_last_error(void) { return g_last_error.c_str(); }

const char* alsp_version(void) { return "1.0.0"; }

void alsp_free(void* ptr) { std::free(ptr); }

/* ---- table ------------------------------------------------------------ */

alsp_status alsp_table_build(int64_t max_n, alsp_table** out) {
  if (!out) return fail_invalid("out must not be null");
  *out = nullptr;
  return guarded([&] { *out = new alsp_table{alsp::HurwitzTable::build(max_n)}; });
}

alsp_status alsp_table_load(const char* path, alsp_table** out) {
  if (!out) return fail_invalid("out must not be null");
  *out = nullptr;
  if (!path) return fail_invalid("path must not be null");
  return guarded([&] { *out = new alsp_table{alsp::HurwitzTable::load(path)}; });
}

alsp_status alsp_table_save(const alsp_table* table, const char* path) {
  if (!table) return fail_invalid("table must not be null");
  if (!path) return fail_invalid("path must not be null");
  return guarded([&] { table->impl.save(path); });
}

int64_t alsp_table_max(const alsp_table* table) { return table ? table->impl.max_n() : -1; }

alsp_status alsp_table_hurwitz12(const alsp_table* table, int64_t n, int64_t* out) {
  if (!table) return fail_invalid("table must not be null");
  if (!out) return fail_invalid("out must not be null");
  return guarded([&] { *out = table->impl.twelve_h(n); });
}

void alsp_table_free(alsp_table* table) { delete table; }

/* ---- sign patterns ----------------------------------------------------- */

int64_t alsp_sigma_count(int64_t level) {
  int64_t n = -1;
  alsp_status st = guarded([&] { n = alsp::SignPattern::count(level); });
  return st == ALSP_OK ? n : -1;
}

alsp_status alsp_sigma_name(int64_t level, int64_t index, char* buf, size_t buflen) {
  if (!buf) return fail_invalid("buf must not be null");
  return guarded([&] {
    if (index < 0 || index >= alsp::SignPattern::count(level))
      throw std::invalid_argument("sigma index out of range");
    std::string s = alsp::SignPattern::all(level)[(size_t)index].str();
    if (s.size() + 1 > buflen) throw std::invalid_argument("sigma buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

alsp_status alsp_sigma_check(int64_t level, const char* sigma) {
  if (!sigma) return fail_invalid("sigma must not be null");
  return guarded([&] { (void)alsp::SignPattern::parse(level, sigma); });
}

int alsp_sigma_admissible(int64_t level, const char* sigma, int space) {
  if (!sigma) {
    g_last_error = "sigma must not be null";
    return -1;
  }
  int ok = -1;
  alsp_status st = guarded(
      [&] { ok = alsp::SignPattern::parse(level, sigma).admissible(to_space(space)) ? 1 : 0; });
  return st == ALSP_OK ? ok : -1;
}

/* ---- traces ------------------------------------------------------------ */

alsp_status alsp_trace_q(const alsp_table* table, int64_t k, int64_t N, int64_t m, int64_t Q,
                         int space, char** exact, alsp_trace_stats* stats) {
  if (!table) return fail_invalid("table must not be null");
  if (exact) *exact = nullptr;
  return guarded([&] {
    alsp::TraceReport r = alsp::trace_q(k, N, m, Q, to_space(space), table->impl);
    if (exact) *exact = dup_string(r.exact.get_str());
    fill_stats(stats, r);
  });
}

alsp_status alsp_trace_sigma(const alsp_table* table, int64_t k, int64_t N, int64_t m,
                             const char* sigma, int space, char** exact,
                             alsp_trace_stats* stats) {
  if (!table) return fail_invalid("table must not be null");
  if (!sigma) return fail_invalid("sigma must not be null");
  if (exact) *exact = nullptr;
  return guarded([&] {
    alsp::SignPattern pat = alsp::SignPattern::parse(N, sigma);
    alsp::TraceReport r = alsp::trace_sigma(k, N, m, pat, to_space(space), table->impl);
    if (exact) *exact = dup_string(r.exact.get_str());
    fill_stats(stats, r);
  });
}

alsp_status alsp_dim(const alsp_table* table, int64_t k, int64_t N, int space, int64_t* out) {
  if (!table) return fail_invalid("table must not be null");
  if (!out) return fail_invalid("out must not be null");
  return guarded([&] { *out = alsp::dim_space(k, N, to_space(space), table->impl); });
}

alsp_status alsp_dim_sigma(const alsp_table* table, int64_t k, int64_t N, const char* sigma,
                           int space, int64_t* out) {
  if (!table) return fail_invalid("table must not be null");
  if (!sigma) return fail_invalid("sigma must not be null");
  if (!out) return fail_invalid("out must not be null");
  return guarded([&] {
    alsp::SignPattern pat = alsp::SignPattern::parse(N, sigma);
    *out = alsp::dim_sigma(k, N, pat, to_space(space), table->impl);
  });
}

alsp_status alsp_dim_global(const alsp_table* table, int64_t k, int64_t N, int sign, int space,
                            int64_t* out) {
  if (!table) return fail_invalid("table must not be null");
  if (!out) return fail_invalid("out must not be null");
  return guarded([&] { *out = alsp::dim_global(k, N, sign, to_space(space), table->impl); });
}

/* ---- proportions -------------------------------------------------------- */

alsp_status alsp_proportion_sigma(int64_t N, const char* sigma, int space, char** exact,
                                  double* value) {
  if (!sigma) return fail_invalid("sigma must not be null");
  if (exact) *exact = nullptr;
  return guarded([&] {
    alsp::SignPattern pat = alsp::SignPattern::parse(N, sigma);
    std::string s = rat_pair(alsp::proportion_sigma(N, pat, to_space(space)), value);
    if (exact) *exact = dup_string(s);
  });
}

alsp_status alsp_proportion_global(int64_t N, int sign, int space, char** exact, double* value) {
  if (exact) *exact = nullptr;
  return guarded([&] {
    std::string s = rat_pair(alsp::proportion_global(N, sign, to_space(space)), value);
    if (exact) *exact = dup_string(s);
  });
}

/* ---- equidistribution ---------------------------------------------------- */

const char* alsp_row_flag_name(int32_t flag) {
  switch (flag) {
    case ALSP_ROW_OK: return alsp::row_flag_name(alsp::RowFlag::ok);
    case ALSP_ROW_P_DIVIDES_LEVEL: return alsp::row_flag_name(alsp::RowFlag::p_divides_level);
    case ALSP_ROW_ZERO_DIM: return alsp::row_flag_name(alsp::RowFlag::zero_dim);
    case ALSP_ROW_INADMISSIBLE: return alsp::row_flag_name(alsp::RowFlag::inadmissible);
  }
  return "unknown";
}

alsp_status alsp_equid(const alsp_table* table, int64_t p, const int64_t* levels, size_t nlevels,
                       const int64_t* weights, size_t nweights, const char* sigma, int space,
                       int32_t n_max, int32_t jobs, alsp_equid_row** rows, size_t* nrows) {
  if (!table) return fail_invalid("table must not be null");
  if (!rows || !nrows) return fail_invalid("rows/nrows must not be null");
  *rows = nullptr;
  *nrows = 0;
  if (!levels || nlevels == 0) return fail_invalid("levels must not be empty");
  if (!weights || nweights == 0) return fail_invalid("weights must not be empty");
  return guarded([&] {
    std::optional<std::string> sigma_text;
    if (sigma) sigma_text = std::string(sigma);
    std::vector<alsp::EquidRow> got = alsp::equid_report(
        std::vector<int64_t>(levels, levels + nlevels),
        std::vector<int64_t>(weights, weights + nweights), p, n_max, sigma_text,
        to_space(space), table->impl, jobs);
    auto* out = static_cast<alsp_equid_row*>(std::calloc(got.size(), sizeof(alsp_equid_row)));
    if (!out && !got.empty()) throw std::bad_alloc();
    for (size_t i = 0; i < got.size(); ++i) {
      const alsp::EquidRow& r = got[i];
      alsp_equid_row& c = out[i];
      c.p = r.p;
      c.N = r.N;
      c.k = r.k;
      c.sigma_index = r.sigma_index;
      if (r.sigma.size() + 1 > sizeof(c.sigma)) {
        std::free(out);
        throw std::invalid_argument("sigma text does not fit the C row buffer");
      }
      std::memcpy(c.sigma, r.sigma.c_str(), r.sigma.size() + 1);
      c.space = r.space == alsp::Space::full ? ALSP_SPACE_FULL : ALSP_SPACE_NEW;
      c.n = r.n;
      c.flag = static_cast<int32_t>(r.flag);
      c.observed = r.observed;
      c.target = r.target;
      c.deviation = r.deviation;
    }
    *rows = out;
    *nrows = got.size();
  });
}

alsp_status alsp_target_moment(int64_t p, int32_t n, double* out) {
  if (!out) return fail_invalid("out must not be null");
  return guarded([&] { *out = alsp::target_moment(p, n); });
}

alsp_status alsp_plancherel_moment(int64_t p, int32_t n, double abs_tol, double* out) {
  if (!out) return fail_invalid("out must not be null");
  return guarded([&] { *out = alsp::plancherel_moment(p, n, abs_tol); });
}

alsp_status alsp_chebyshev_moment(const alsp_table* table, int64_t k, int64_t N,
                                  const char* sigma, int space, int64_t p, int32_t n,
                                  double* out) {
  if (!table) return fail_invalid("table must not be null");
  if (!sigma) return fail_invalid("sigma must not be null");
  if (!out) return fail_invalid("out must not be null");
  return guarded([&] {
    alsp::SignPattern pat = alsp::SignPattern::parse(N, sigma);
    *out = alsp::chebyshev_moment(k, N, pat, to_space(space), p, n, table->impl);
  });
}

/* ---- verification --------------------------------------------------------- */

alsp_status alsp_verify_suites(char** names) {
  if (!names) return fail_invalid("names must not be null");
  *names = nullptr;
  return guarded([&] {
    std::string joined;
    for (const std::string& s : alsp::suite_names()) {
      if (!joined.empty()) joined += '\n';
      joined += s;
    }
    *names = dup_string(joined);
  });
}

alsp_status alsp_verify_table_need(const char* suite, int64_t max_n, int64_t max_k,
                                   int64_t* out) {
  if (!suite) return fail_invalid("suite must not be null");
  if (!out) return fail_invalid("out must not be null");
  return guarded([&] { *out = alsp::suite_table_need(suite, max_n, max_k); });
}

alsp_status alsp_verify(const alsp_table* table, const char* suite, int64_t max_n, int64_t max_k,
                        int32_t jobs, char** failures, alsp_verify_summary* summary) {
  if (!suite) return fail_invalid("suite must not be null");
  if (failures) *failures = nullptr;
  return guarded([&] {
    alsp::VerifyResult r =
        alsp::run_suite(suite, max_n, max_k, table ? &table->impl : nullptr, jobs);
    if (summary) {
      summary->checks = r.checks;
      summary->failures = (int64_t)r.failures.size();
    }
    if (failures && !r.failures.empty()) {
      std::string joined;
      for (const std::string& row : r.failures) {
        if (!joined.empty()) joined += '\n';
        joined += row;
      }
      *failures = dup_string(joined);
    }
  });
}

} /* extern "C" */
