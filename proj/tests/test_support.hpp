#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "bellkit/bipartite.hpp"
#include "bellkit/hermitian_eig.hpp"
#include "bellkit/operator_matrix.hpp"
#include "bellkit/qudit_state.hpp"

namespace testsupport {

using bellkit::Complex;
using bellkit::OperatorMatrix;

// Deterministic generator so every test run sees the same states.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double normal() {
        // Box-Muller; one value per call keeps the stream simple.
        const double u1 = std::max(uniform(), 1e-300);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
    }
    Complex cnormal() { return Complex(normal(), normal()); }
};

inline OperatorMatrix random_hermitian(Rng& rng, int dim) {
    OperatorMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
        m(r, r) = rng.normal();
        for (int c = r + 1; c < dim; ++c) {
            m(r, c) = rng.cnormal();
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

// Ginibre construction: G G^dag / Tr, full rank almost surely.
inline OperatorMatrix random_density_mat(Rng& rng, int dim) {
    OperatorMatrix g(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = rng.cnormal();
    OperatorMatrix rho = g * g.dagger();
    return rho * (1.0 / rho.trace());
}

inline bellkit::DensityMatrix random_density(Rng& rng, bellkit::Spin j) {
    return bellkit::DensityMatrix(j, random_density_mat(rng, j.dim()));
}

inline bellkit::BipartiteState random_bipartite(Rng& rng, bellkit::Spin j1, bellkit::Spin j2) {
    return bellkit::BipartiteState(j1, j2, random_density_mat(rng, j1.dim() * j2.dim()));
}

inline OperatorMatrix random_unitary(Rng& rng, int dim) {
    return bellkit::expm_i_hermitian(random_hermitian(rng, dim));
}

// Random two-qubit X-state: random X-compatible diagonal plus off-diagonal
// phases bounded by the PSD minors.
inline bellkit::BipartiteState random_x_state(Rng& rng) {
    double d[4];
    double tot = 0.0;
    for (double& x : d) {
        x = rng.uniform() + 0.05;
        tot += x;
    }
    for (double& x : d) x /= tot;
    const double r14 = rng.uniform() * std::sqrt(d[0] * d[3]);
    const double p14 = rng.uniform() * 2.0 * 3.141592653589793;
    const double r23 = rng.uniform() * std::sqrt(d[1] * d[2]);
    const double p23 = rng.uniform() * 2.0 * 3.141592653589793;
    OperatorMatrix m(4);
    for (int i = 0; i < 4; ++i) m(i, i) = d[i];
    m(0, 3) = r14 * Complex(std::cos(p14), std::sin(p14));
    m(3, 0) = std::conj(m(0, 3));
    m(1, 2) = r23 * Complex(std::cos(p23), std::sin(p23));
    m(2, 1) = std::conj(m(1, 2));
    return bellkit::BipartiteState(bellkit::Spin(1), bellkit::Spin(1), std::move(m));
}

}  // namespace testsupport
