#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bellkit {

enum class ExecMode { serial, parallel };

// Worker count for parallel regions: OpenMP's default, capped by the
// BELLKIT_THREADS environment variable when set. 1 without OpenMP.
int max_threads();

// Runs f(i) for i in [0, n). The parallel mode distributes iterations over
// OpenMP threads; every iteration writes only to its own slot, so results
// do not depend on the interleaving.
template <typename F>
void for_each_index(long n, ExecMode mode, F&& f) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel && n > 1) {
        const int threads = max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long i = 0; i < n; ++i) f(i);
        return;
    }
#else
    (void)mode;
#endif
    for (long i = 0; i < n; ++i) f(i);
}

}  // namespace bellkit
