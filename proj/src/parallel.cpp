#include "bellkit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace bellkit {

int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("BELLKIT_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1 && cap < n) n = cap;
        } catch (...) {
            // unparsable value: keep the OpenMP default
        }
    }
    return n;
#else
    return 1;
#endif
}

}  // namespace bellkit
