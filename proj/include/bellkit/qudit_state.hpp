#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bellkit/operator_matrix.hpp"
#include "bellkit/spin.hpp"

namespace bellkit {

// Raised when a state fails one of the density-matrix invariants. The
// invariant name ("hermiticity", "trace", "psd", ...) is kept separate so
// callers can report which check failed.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string invariant, const std::string& message)
        : std::runtime_error(message), invariant_(std::move(invariant)) {}
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

// Validated density matrix of a single spin-j qudit. Hermiticity and unit
// trace are enforced to 1e-10 elementwise, positivity down to eigenvalue
// -1e-9; the stored matrix is kept exactly as supplied.
class DensityMatrix {
public:
    static constexpr double kHermTol = 1e-10;
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kPsdFloor = -1e-9;

    DensityMatrix(Spin spin, OperatorMatrix mat);

    Spin spin() const { return spin_; }
    int dim() const { return mat_.dim(); }
    const OperatorMatrix& mat() const { return mat_; }

private:
    Spin spin_;
    OperatorMatrix mat_;
};

// Table of the parametrizing expectation values: entry (k,l), 1-based, is
// <Jcal_+^{2j-l+1} Jcal_-^{2j} Jcal_+^{k-1}> = Tr(rho A_lk), which the
// parametrization identifies with the matrix element rho_kl.
struct ExpectationTable {
    Spin spin;
    OperatorMatrix values;
};

// Compute the table by tracing against the ladder-product projectors.
ExpectationTable expectations_of(const DensityMatrix& rho);

// Rebuild and validate a density matrix from its expectation table.
DensityMatrix from_expectations(const ExpectationTable& table);

double purity(const DensityMatrix& rho);  // Tr(rho^2), in [1/d, 1]

// Generalized Bloch vector lambda_k = Tr(rho Lambda_k), length d^2-1.
std::vector<double> bloch_vector(const DensityMatrix& rho);

}  // namespace bellkit
