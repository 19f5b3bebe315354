#include "rpt/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rpt {

int thread_count() {
  int n = 1;
#ifdef _OPENMP
  n = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("RPT_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) n = v;
    } catch (...) {
      // ignore malformed values, keep the default
    }
  }
  return n < 1 ? 1 : n;
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace rpt
