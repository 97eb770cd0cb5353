#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alsp/classnum.hpp"

namespace alsp {

struct VerifyResult {
  std::string suite;
  std::int64_t checks = 0;
  std::vector<std::string> failures;  // machine-readable "suite,key=value,..." rows
  bool ok() const { return failures.empty(); }
};

std::vector<std::string> suite_names();

// Largest Hurwitz index the suite will request; 0 when no table is needed.
// max_n / max_k <= 0 pick the suite defaults (same resolution run_suite uses).
std::int64_t suite_table_need(const std::string& suite, std::int64_t max_n, std::int64_t max_k);

// Cross-checks the engine against routes that do not share its code paths:
//   identities  divisor-sum identities and sign-pattern orthogonality
//   dimensions  full-space traces at m=1 against the classical formula
//   newspace    newspace traces at m=1 against Moebius inversion
//   w4          forced vanishing when 4 || N and the sign at 4 is +1
//   hurwitz     class-number table against the per-n enumeration
//   tau         level-1 weight-12 traces against the Delta q-expansion
//   bounds      sigma products inside the pinned window, randomized levels
// `table` may be null; a sufficient table is then built on the fly.
VerifyResult run_suite(const std::string& suite, std::int64_t max_n, std::int64_t max_k,
                       const HurwitzTable* table, int jobs = 1);

}  // namespace alsp
