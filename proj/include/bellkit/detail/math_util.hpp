#pragma once

#include <cmath>
#include <vector>

namespace bellkit::detail {

// ln(n!) with a small cache; n < 0 yields 0 so guarded Racah-sum terms can
// be skipped by the caller without branching on the prefactor.
inline double ln_factorial(int n) {
    if (n < 0) return 0.0;
    static const std::vector<double> cache = [] {
        std::vector<double> c(257);
        c[0] = 0.0;
        for (int i = 1; i <= 256; ++i) c[static_cast<size_t>(i)] = c[static_cast<size_t>(i - 1)] + std::log(static_cast<double>(i));
        return c;
    }();
    if (n < static_cast<int>(cache.size())) return cache[static_cast<size_t>(n)];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace bellkit::detail
