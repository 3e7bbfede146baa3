#pragma once

#include <span>

#include "bellkit/qudit_state.hpp"

namespace bellkit {

enum class Side { first, second };

// Two-qudit state with subsystem spins (j1, j2) and the composite index
// convention kt = (k1-1)*d2 + k2, i.e. row-major over subsystem 1 then 2.
// That ordering is the single source of truth for every bipartite routine.
class BipartiteState {
public:
    BipartiteState(Spin j1, Spin j2, OperatorMatrix mat);

    Spin j1() const { return j1_; }
    Spin j2() const { return j2_; }
    int dim1() const { return j1_.dim(); }
    int dim2() const { return j2_.dim(); }
    int dim() const { return rho_.dim(); }
    const OperatorMatrix& mat() const { return rho_.mat(); }
    const DensityMatrix& rho() const { return rho_; }

    // Composite index (0-based) of the subsystem pair (k1, k2), 1-based.
    int composite(int k1, int k2) const { return (k1 - 1) * j2_.dim() + (k2 - 1); }

private:
    Spin j1_, j2_;
    DensityMatrix rho_;
};

// rho1 (x) rho2; the entries equal the products of subsystem expectations.
BipartiteState compose_product(const DensityMatrix& rho1, const DensityMatrix& rho2);

// Pure state |psi><psi| from d1*d2 amplitudes (normalized internally).
BipartiteState pure_bipartite(Spin j1, Spin j2, std::span<const Complex> amplitudes);

// Matrix element rho_{(k1 k2),(l1 l2)} computed by tracing against the
// tensor-product projector A_{l1 k1} (x) A_{l2 k2}; 1-based indices.
Complex element(const BipartiteState& state, int k1, int k2, int l1, int l2);

// Partial traces. reduce_first traces out subsystem 1 (result lives on j2);
// reduce_second traces out subsystem 2 (result lives on j1).
DensityMatrix reduce_first(const BipartiteState& state);
DensityMatrix reduce_second(const BipartiteState& state);

// Partial transpose on the chosen subsystem. Hermitian with unit trace, but
// generally not PSD, so it is returned as a plain matrix.
OperatorMatrix partial_transpose(const BipartiteState& state, Side side);

// Negativity: sum of |negative eigenvalues| of the partial transpose.
// Zero for separable states; positive certifies entanglement (PPT).
double negativity(const BipartiteState& state, Side side = Side::first);

// log2(2N + 1), provided as a derived convenience.
double log_negativity(const BipartiteState& state, Side side = Side::first);

// Two-qubit X-state projection rho_X = (rho + X1 rho X1)/2, X1 = sz (x) sz.
// The eight non-X positions come out exactly zero.
BipartiteState x_state_projection(const BipartiteState& state);

}  // namespace bellkit
