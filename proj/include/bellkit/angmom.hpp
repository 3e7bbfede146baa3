#pragma once

#include <span>
#include <vector>

#include "bellkit/operator_matrix.hpp"
#include "bellkit/spin.hpp"

namespace bellkit {

enum class Ladder { plus, minus };

// J_z = diag(j, j-1, ..., -j) in the canonical ordering |k> = |j, j-k+1>.
OperatorMatrix jz(Spin j);

// Standard raising/lowering matrices: <j,m+1|J_+|j,m> = sqrt(j(j+1)-m(m+1)).
OperatorMatrix jplus(Spin j);
OperatorMatrix jminus(Spin j);

OperatorMatrix jx(Spin j);  // (J+ + J-)/2
OperatorMatrix jy(Spin j);  // (J+ - J-)/2i

// Normalized ladder power: sqrt((2j-r)!/(r!(2j)!)) J_pm^r, with r=0 -> I.
// Requires 0 <= r <= 2j; outside that range every needed basis state is
// annihilated, so the call is rejected rather than returning zero.
OperatorMatrix normalized_ladder_power(Spin j, Ladder direction, int r);

// Basis projector |k><l| as the normalized ladder product
// A_kl = Jcal_+^{2j-k+1} Jcal_-^{2j} Jcal_+^{l-1}; 1-based k, l.
OperatorMatrix projector(Spin j, int k, int l);

// Equivalent forms of |k><l| built from the alternative ladder chains
// J_-^{k-1} J_+^{2j} J_-^{2j-l+1} and J_+^{2j-k+1} J_-^{2j} J_+^{2j} J_-^{2j-l+1}
// with their factorial prefactors.
OperatorMatrix projector_alt_minus_plus(Spin j, int k, int l);
OperatorMatrix projector_alt_plus_minus(Spin j, int k, int l);

// Diagonal functional operators F_k = F(J_z - kI), G_k = G(J_z + kI) where
// F(Jz) = J^2 - Jz^2 + Jz = J+J- and G(Jz) = J^2 - Jz^2 - Jz = J-J+.
OperatorMatrix functional_f(Spin j, int k);
OperatorMatrix functional_g(Spin j, int k);

// Mixed ladder power J_left^k J_right^m (right is the opposite direction),
// evaluated through the F/G product formulas rather than plain matrix powers.
OperatorMatrix ladder_product(Spin j, Ladder left_dir, int left_pow, int right_pow);

// d^2-1 generators of su(d): symmetric block (A_kl + A_lk, k<l lexicographic),
// then antisymmetric i(A_lk - A_kl) in the same pair order, then the d-1
// diagonal generators. Tr(L_j L_k) = 2 delta_jk.
struct GellMannBasis {
    int dim;
    std::vector<OperatorMatrix> generators;
};

GellMannBasis gell_mann(int d);

// O = (tr/d) I + (1/2) sum_k coeffs_k Lambda_k with coeffs_k = Tr(O Lambda_k).
struct OperatorExpansion {
    Complex trace;
    std::vector<Complex> coeffs;
};

OperatorExpansion expand_operator(const OperatorMatrix& o, const GellMannBasis& basis);
OperatorMatrix reconstruct_operator(Complex trace, std::span<const Complex> coeffs,
                                    const GellMannBasis& basis);

}  // namespace bellkit
