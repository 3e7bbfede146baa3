#include "bellkit/qudit_state.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "bellkit/angmom.hpp"
#include "bellkit/hermitian_eig.hpp"

namespace bellkit {

DensityMatrix::DensityMatrix(Spin spin, OperatorMatrix mat)
    : spin_(spin), mat_(std::move(mat)) {
    if (mat_.dim() != spin.dim())
        throw ValidationError("dimension", "DensityMatrix: matrix dim does not match 2j+1");
    if (!mat_.is_hermitian(kHermTol))
        throw ValidationError("hermiticity",
                              "DensityMatrix: matrix not Hermitian within 1e-10");
    const Complex tr = mat_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol)
        throw ValidationError("trace", "DensityMatrix: trace differs from 1 by more than 1e-10");
    const EigenSystem es = eigh(mat_);
    if (es.values.front() < kPsdFloor) {
        std::ostringstream msg;
        msg << "DensityMatrix: psd violated, smallest eigenvalue " << es.values.front();
        throw ValidationError("psd", msg.str());
    }
}

ExpectationTable expectations_of(const DensityMatrix& rho) {
    const Spin j = rho.spin();
    const int d = j.dim();
    OperatorMatrix values(d);
    for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l)
            values(k - 1, l - 1) = (rho.mat() * projector(j, l, k)).trace();
    return ExpectationTable{j, values};
}

DensityMatrix from_expectations(const ExpectationTable& table) {
    // rho_kl = table(k,l); every invariant is re-checked by the constructor.
    return DensityMatrix(table.spin, table.values);
}

double purity(const DensityMatrix& rho) { return (rho.mat() * rho.mat()).trace().real(); }

std::vector<double> bloch_vector(const DensityMatrix& rho) {
    const GellMannBasis basis = gell_mann(rho.dim());
    std::vector<double> lambda;
    lambda.reserve(basis.generators.size());
    for (const auto& g : basis.generators) {
        const Complex v = (rho.mat() * g).trace();
        if (std::abs(v.imag()) > 1e-10)
            throw std::runtime_error("bloch_vector: non-real expectation value");
        lambda.push_back(v.real());
    }
    return lambda;
}

}  // namespace bellkit
