#include "bellkit/bipartite.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bellkit/angmom.hpp"
#include "bellkit/hermitian_eig.hpp"

namespace bellkit {

BipartiteState::BipartiteState(Spin j1, Spin j2, OperatorMatrix mat)
    : j1_(j1), j2_(j2), rho_(Spin(j1.dim() * j2.dim() - 1), std::move(mat)) {}

BipartiteState compose_product(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    return BipartiteState(rho1.spin(), rho2.spin(), kron(rho1.mat(), rho2.mat()));
}

BipartiteState pure_bipartite(Spin j1, Spin j2, std::span<const Complex> amplitudes) {
    const int d = j1.dim() * j2.dim();
    if (static_cast<int>(amplitudes.size()) != d)
        throw std::domain_error("pure_bipartite: amplitude count does not match d1*d2");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) norm2 += std::norm(a);
    if (norm2 <= 0.0) throw std::domain_error("pure_bipartite: zero vector");
    OperatorMatrix m(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m(r, c) = amplitudes[static_cast<size_t>(r)] *
                      std::conj(amplitudes[static_cast<size_t>(c)]) / norm2;
    return BipartiteState(j1, j2, std::move(m));
}

Complex element(const BipartiteState& state, int k1, int k2, int l1, int l2) {
    const int d1 = state.dim1(), d2 = state.dim2();
    if (k1 < 1 || k1 > d1 || l1 < 1 || l1 > d1 || k2 < 1 || k2 > d2 || l2 < 1 || l2 > d2)
        throw std::domain_error("element: index outside subsystem range");
    const OperatorMatrix proj =
        kron(projector(state.j1(), l1, k1), projector(state.j2(), l2, k2));
    return (state.mat() * proj).trace();
}

DensityMatrix reduce_first(const BipartiteState& state) {
    const int d1 = state.dim1(), d2 = state.dim2();
    OperatorMatrix out(d2);
    for (int k2 = 1; k2 <= d2; ++k2)
        for (int l2 = 1; l2 <= d2; ++l2) {
            Complex s(0.0, 0.0);
            for (int k1 = 1; k1 <= d1; ++k1)
                s += state.mat()(state.composite(k1, k2), state.composite(k1, l2));
            out(k2 - 1, l2 - 1) = s;
        }
    return DensityMatrix(state.j2(), std::move(out));
}

DensityMatrix reduce_second(const BipartiteState& state) {
    const int d1 = state.dim1(), d2 = state.dim2();
    OperatorMatrix out(d1);
    for (int k1 = 1; k1 <= d1; ++k1)
        for (int l1 = 1; l1 <= d1; ++l1) {
            Complex s(0.0, 0.0);
            for (int k2 = 1; k2 <= d2; ++k2)
                s += state.mat()(state.composite(k1, k2), state.composite(l1, k2));
            out(k1 - 1, l1 - 1) = s;
        }
    return DensityMatrix(state.j1(), std::move(out));
}

OperatorMatrix partial_transpose(const BipartiteState& state, Side side) {
    const int d1 = state.dim1(), d2 = state.dim2();
    OperatorMatrix out(state.dim());
    for (int k1 = 1; k1 <= d1; ++k1)
        for (int k2 = 1; k2 <= d2; ++k2)
            for (int l1 = 1; l1 <= d1; ++l1)
                for (int l2 = 1; l2 <= d2; ++l2) {
                    const int r = state.composite(k1, k2), c = state.composite(l1, l2);
                    out(r, c) = (side == Side::first)
                                    ? state.mat()(state.composite(l1, k2), state.composite(k1, l2))
                                    : state.mat()(state.composite(k1, l2), state.composite(l1, k2));
                }
    return out;
}

double negativity(const BipartiteState& state, Side side) {
    const EigenSystem es = eigh(partial_transpose(state, side));
    double n = 0.0;
    for (double w : es.values)
        if (w < 0.0) n -= w;
    return n;
}

double log_negativity(const BipartiteState& state, Side side) {
    return std::log2(2.0 * negativity(state, side) + 1.0);
}

BipartiteState x_state_projection(const BipartiteState& state) {
    if (state.dim1() != 2 || state.dim2() != 2)
        throw std::domain_error("x_state_projection: requires a two-qubit state");
    OperatorMatrix out(4);
    // X1 = sz (x) sz commutes entrywise with the diagonal and anti-diagonal;
    // averaging with X1 rho X1 cancels everything else, so those positions
    // are written as exact zeros.
    for (int i = 0; i < 4; ++i) out(i, i) = state.mat()(i, i);
    out(0, 3) = state.mat()(0, 3);
    out(3, 0) = state.mat()(3, 0);
    out(1, 2) = state.mat()(1, 2);
    out(2, 1) = state.mat()(2, 1);
    return BipartiteState(state.j1(), state.j2(), std::move(out));
}

}  // namespace bellkit
