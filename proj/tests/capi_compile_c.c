/* Compiled as plain C89-compatible C: proves the public header needs no C++
 * and that the basic build/trace/free flow works through the C ABI. */
#include <string.h>

#include "alsp.h"

int capi_c_smoke(void) {
  alsp_table* t = NULL;
  int64_t h = 0;
  char* exact = NULL;
  alsp_trace_stats st;
  int bad;

  if (alsp_table_build(100, &t) != ALSP_OK) return 1;
  if (alsp_table_hurwitz12(t, 3, &h) != ALSP_OK || h != 4) {
    alsp_table_free(t);
    return 2;
  }
  if (alsp_trace_q(t, 12, 1, 2, 1, ALSP_SPACE_FULL, &exact, &st) != ALSP_OK) {
    alsp_table_free(t);
    return 3;
  }
  bad = strcmp(exact, "-24") != 0;
  alsp_free(exact);
  alsp_table_free(t);
  if (bad) return 4;
  if (alsp_sigma_count(12) != 4) return 5;
  if (strcmp(alsp_status_name(ALSP_E_RANGE), "table-range") != 0) return 6;
  return 0;
}
