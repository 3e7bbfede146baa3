#pragma once

#include <vector>

#include "bellkit/operator_matrix.hpp"

namespace bellkit {

// Eigendecomposition A = V diag(values) V^dagger of a Hermitian matrix,
// eigenvalues ascending, eigenvectors in the columns of `vectors`.
struct EigenSystem {
    std::vector<double> values;
    OperatorMatrix vectors;
};

// Cyclic complex Jacobi. Intended for the small dense matrices this toolkit
// works with (dim <= ~40); throws if the input is not Hermitian to 1e-9.
EigenSystem eigh(const OperatorMatrix& a);

// exp(iH) for Hermitian H, computed from the eigendecomposition so the
// result is unitary to rounding.
OperatorMatrix expm_i_hermitian(const OperatorMatrix& h);

// PSD square root; eigenvalues are clipped at zero before the sqrt.
OperatorMatrix sqrt_psd(const OperatorMatrix& a);

}  // namespace bellkit
