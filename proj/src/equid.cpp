#include "alsp/equid.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "alsp/arith.hpp"
#include "alsp/parallel.hpp"
#include "alsp/trace.hpp"

namespace alsp {

const char* row_flag_name(RowFlag f) {
  switch (f) {
    case RowFlag::ok: return "ok";
    case RowFlag::p_divides_level: return "p-divides-level";
    case RowFlag::zero_dim: return "zero-dim";
    case RowFlag::inadmissible: return "inadmissible";
  }
  return "?";
}

namespace {

void validate_p(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("equid: p must be prime");
}

double chebyshev_x(int n, double x) {
  // X_0 = 1, X_1 = x, X_{j+1} = x X_j - X_{j-1}.
  double a = 1, b = x;
  if (n == 0) return a;
  for (int j = 1; j < n; ++j) {
    const double c = x * b - a;
    a = b;
    b = c;
  }
  return b;
}

struct PlancherelParams {
  std::int64_t p;
  int n;
};

double plancherel_integrand(double x, void* raw) {
  const auto* prm = (const PlancherelParams*)raw;
  const double sp = std::sqrt((double)prm->p);
  const double br = sp + 1.0 / sp;
  return chebyshev_x(prm->n, x) * ((double)(prm->p + 1) / M_PI) * std::sqrt(1.0 - x * x / 4.0) /
         (br * br - x * x);
}

}  // namespace

double target_moment(std::int64_t p, int n) {
  validate_p(p);
  if (n < 0) throw std::invalid_argument("target_moment: n must be >= 0");
  if (n % 2 != 0) return 0.0;
  return std::pow((double)p, -(double)n / 2.0);
}

double plancherel_moment(std::int64_t p, int n, double abs_tol) {
  validate_p(p);
  if (n < 0) throw std::invalid_argument("plancherel_moment: n must be >= 0");
  if (abs_tol <= 0) throw std::invalid_argument("plancherel_moment: tolerance must be positive");
  static std::once_flag handler_off;
  std::call_once(handler_off, [] { gsl_set_error_handler_off(); });

  PlancherelParams prm{p, n};
  gsl_function f;
  f.function = &plancherel_integrand;
  f.params = &prm;
  constexpr std::size_t kLimit = 4096;
  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(kLimit);
  if (!ws) throw std::bad_alloc();
  double result = 0, abserr = 0;
  const int status = gsl_integration_qags(&f, -2.0, 2.0, abs_tol, 0.0, kLimit, ws, &result, &abserr);
  gsl_integration_workspace_free(ws);
  if (status != GSL_SUCCESS || abserr > abs_tol)
    throw QuadratureError("plancherel_moment: quadrature did not reach tolerance (status " +
                          std::to_string(status) + ", err " + std::to_string(abserr) + ")");
  return result;
}

double chebyshev_moment(std::int64_t k, std::int64_t N, const SignPattern& sigma, Space space,
                        std::int64_t p, int n, const HurwitzTable& table) {
  validate_p(p);
  if (n < 0) throw std::invalid_argument("chebyshev_moment: n must be >= 0");
  if (N % p == 0) throw std::invalid_argument("chebyshev_moment: p must not divide the level");
  if (!sigma.admissible(space))
    throw std::invalid_argument("chebyshev_moment: inadmissible sign pattern");
  const std::int64_t m = ipow(p, n);
  const std::int64_t dim = dim_sigma(k, N, sigma, space, table);
  if (dim == 0) throw std::invalid_argument("chebyshev_moment: zero-dimensional eigenspace");
  const Int tr = sigma_combine(sigma, exact_traces_all_q(k, N, m, space, table));
  const std::int64_t e = n * (k - 1);
  Rat r(tr);
  r /= Int((long)dim) * int_pow(p, (unsigned long)(e / 2));
  double v = r.get_d();
  if (e % 2 != 0) v /= std::sqrt((double)p);
  return v;
}

std::vector<EquidRow> equid_report(std::vector<std::int64_t> levels,
                                   std::vector<std::int64_t> weights, std::int64_t p, int n_max,
                                   const std::optional<std::string>& sigma_text, Space space,
                                   const HurwitzTable& table, int jobs) {
  validate_p(p);
  if (n_max < 0) throw std::invalid_argument("equid_report: n_max must be >= 0");
  if (levels.empty() || weights.empty())
    throw std::invalid_argument("equid_report: need at least one level and one weight");
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  for (std::int64_t N : levels)
    if (N < 1) throw std::invalid_argument("equid_report: levels must be >= 1");
  for (std::int64_t k : weights)
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("equid_report: weights must be even and >= 2");

  const double nan = std::numeric_limits<double>::quiet_NaN();
  struct Cell {
    std::int64_t N, k;
    std::vector<EquidRow> rows;
  };
  std::vector<Cell> cells;
  for (std::int64_t N : levels)
    for (std::int64_t k : weights) cells.push_back({N, k, {}});

  parallel_for(cells.size(), jobs, [&](std::size_t ci) {
    Cell& cell = cells[ci];
    const std::int64_t N = cell.N, k = cell.k;
    std::vector<SignPattern> patterns;
    if (sigma_text)
      patterns.push_back(SignPattern::parse(N, *sigma_text));
    else
      patterns = SignPattern::all(N);

    auto flagged = [&](const SignPattern& s, RowFlag flag) {
      EquidRow row;
      row.p = p;
      row.N = N;
      row.k = k;
      row.sigma_index = s.index();
      row.sigma = s.str();
      row.space = space;
      row.n = -1;
      row.flag = flag;
      row.observed = row.target = row.deviation = nan;
      cell.rows.push_back(std::move(row));
    };

    if (N % p == 0) {
      for (const SignPattern& s : patterns) flagged(s, RowFlag::p_divides_level);
      return;
    }
    // One operator-trace pass per n, shared by every pattern.
    std::vector<std::vector<std::pair<std::int64_t, Int>>> traces;
    traces.reserve((std::size_t)n_max + 1);
    for (int n = 0; n <= n_max; ++n)
      traces.push_back(exact_traces_all_q(k, N, ipow(p, n), space, table));
    for (const SignPattern& s : patterns) {
      if (!s.admissible(space)) {
        flagged(s, RowFlag::inadmissible);
        continue;
      }
      const Int dim = sigma_combine(s, traces[0]);
      if (dim < 0) throw ExactnessError("equid_report: negative sigma dimension at N=" + std::to_string(N));
      if (dim == 0) {
        flagged(s, RowFlag::zero_dim);
        continue;
      }
      for (int n = 0; n <= n_max; ++n) {
        EquidRow row;
        row.p = p;
        row.N = N;
        row.k = k;
        row.sigma_index = s.index();
        row.sigma = s.str();
        row.space = space;
        row.n = n;
        row.flag = RowFlag::ok;
        const Int tr = sigma_combine(s, traces[(std::size_t)n]);
        const std::int64_t e = (std::int64_t)n * (k - 1);
        Rat r(tr);
        r /= dim * int_pow(p, (unsigned long)(e / 2));
        row.observed = r.get_d();
        if (e % 2 != 0) row.observed /= std::sqrt((double)p);
        row.target = target_moment(p, n);
        row.deviation = row.observed - row.target;
        cell.rows.push_back(std::move(row));
      }
    }
  });

  std::vector<EquidRow> rows;
  for (Cell& cell : cells)
    for (EquidRow& r : cell.rows) rows.push_back(std::move(r));
  return rows;
}

}  // namespace alsp
