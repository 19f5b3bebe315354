#pragma once

#include <cstddef>

namespace rpt {

// Every kernel with a parallel path also keeps a plain serial loop; tests
// compare the two and the bench tool times them.
enum class ExecMode { serial, parallel };

// Worker cap: RPT_THREADS (>= 1) wins over the OpenMP default.
int thread_count();

bool openmp_enabled();

}  // namespace rpt
