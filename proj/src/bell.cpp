#include "bellkit/bell.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "bellkit/angmom.hpp"
#include "bellkit/hermitian_eig.hpp"

namespace bellkit {

namespace {

constexpr double kPi = std::numbers::pi;

OperatorMatrix conjugate(const OperatorMatrix& u, const OperatorMatrix& a) {
    return u * a * u.dagger();
}

// n(theta, phi) . sigma: Hermitian with exact +-1 spectrum.
OperatorMatrix unit_vector_observable(double theta, double phi) {
    const double ct = std::cos(theta), st = std::sin(theta);
    return OperatorMatrix{{Complex(ct, 0.0), st * Complex(std::cos(phi), -std::sin(phi))},
                          {st * Complex(std::cos(phi), std::sin(phi)), Complex(-ct, 0.0)}};
}

}  // namespace

OperatorMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

OperatorMatrix pauli_y() {
    return {{Complex(0.0, 0.0), Complex(0.0, -1.0)}, {Complex(0.0, 1.0), Complex(0.0, 0.0)}};
}

OperatorMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

DichotomicObservable::DichotomicObservable(OperatorMatrix mat) : mat_(std::move(mat)) {
    if (!mat_.is_hermitian(kTol))
        throw std::domain_error("DichotomicObservable: matrix not Hermitian");
    const OperatorMatrix square = mat_ * mat_;
    if (max_abs_diff(square, OperatorMatrix::identity(mat_.dim())) > kTol)
        throw std::domain_error("DichotomicObservable: A^2 differs from identity");
}

ObservableTuple ObservableFamily::build(std::span<const double> params) const {
    if (static_cast<int>(params.size()) != arity_)
        throw std::domain_error("ObservableFamily: parameter count does not match arity");
    return build_(params);
}

double correlation(const BipartiteState& state, const DichotomicObservable& a,
                   const DichotomicObservable& b) {
    if (a.dim() != state.dim1() || b.dim() != state.dim2())
        throw std::domain_error("correlation: observable dimensions do not match state");
    const Complex e = (state.mat() * kron(a.mat(), b.mat())).trace();
    if (std::abs(e.imag()) > 1e-10)
        throw std::runtime_error("correlation: imaginary residue above 1e-10");
    return e.real();
}

double bell_parameter(const BipartiteState& state, const ObservableTuple& obs) {
    return std::abs(correlation(state, obs.a1, obs.b1) + correlation(state, obs.a1, obs.b2) -
                    correlation(state, obs.a2, obs.b1) + correlation(state, obs.a2, obs.b2));
}

ObservableTuple standard_two_qubit_observables() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return ObservableTuple{DichotomicObservable(pauli_z()), DichotomicObservable(pauli_x()),
                           DichotomicObservable(inv_sqrt2 * (pauli_x() + pauli_z())),
                           DichotomicObservable(inv_sqrt2 * (pauli_x() - pauli_z()))};
}

ObservableTuple xstate_observables() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return ObservableTuple{DichotomicObservable(pauli_y()), DichotomicObservable(pauli_x()),
                           DichotomicObservable(inv_sqrt2 * (pauli_x() + pauli_z())),
                           DichotomicObservable(inv_sqrt2 * (pauli_x() - pauli_z()))};
}

bool is_x_state(const BipartiteState& state, double tol) {
    if (state.dim() != 4) return false;
    const OperatorMatrix& m = state.mat();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const bool x_position = (r == c) || (r + c == 3);
            if (!x_position && std::abs(m(r, c)) > tol) return false;
        }
    return true;
}

double xstate_bell_closed_form(const BipartiteState& state) {
    if (state.dim1() != 2 || state.dim2() != 2)
        throw std::domain_error("xstate_bell_closed_form: requires a two-qubit state");
    if (!is_x_state(state))
        throw std::domain_error("xstate_bell_closed_form: state is not in X form");
    // <s+ (x) s+> is the (4,1) entry, <s+ (x) s-> the (3,2) entry.
    const double im14 = state.mat()(3, 0).imag();
    const double im23 = state.mat()(2, 1).imag();
    return 2.0 * std::sqrt(2.0) * std::abs(im14 + im23);
}

double horodecki_max_bell(const BipartiteState& state) {
    if (state.dim1() != 2 || state.dim2() != 2)
        throw std::domain_error("horodecki_max_bell: requires a two-qubit state");
    const OperatorMatrix paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
    double t[3][3];
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
            t[k][l] = (state.mat() * kron(paulis[k], paulis[l])).trace().real();

    OperatorMatrix tt(3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t[k][r] * t[k][c];
            tt(r, c) = s;
        }
    const EigenSystem es = eigh(tt);
    return 2.0 * std::sqrt(es.values[2] + es.values[1]);
}

BipartiteState bell_basis_state(Complex alpha, Complex beta, Complex gamma, Complex delta) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex amps[4] = {(alpha + beta) * inv_sqrt2, (gamma + delta) * inv_sqrt2,
                             (delta - gamma) * inv_sqrt2, (alpha - beta) * inv_sqrt2};
    return pure_bipartite(Spin(1), Spin(1), amps);
}

ObservableFamily qubit_rotation_family() {
    return ObservableFamily(
        "qubit-rotations", 8, 2, 2, [](std::span<const double> p) {
            return ObservableTuple{DichotomicObservable(unit_vector_observable(p[0], p[1])),
                                   DichotomicObservable(unit_vector_observable(p[2], p[3])),
                                   DichotomicObservable(unit_vector_observable(p[4], p[5])),
                                   DichotomicObservable(unit_vector_observable(p[6], p[7]))};
        });
}

ObservableFamily qubit_qutrit_family_a(U2Variant variant) {
    const std::string name =
        (variant == U2Variant::sigma1x) ? "family-a/u2-x" : "family-a/u2-y";
    return ObservableFamily(name, 7, 2, 3, [variant](std::span<const double> p) {
        const OperatorMatrix sz = pauli_z(), sy = pauli_y(), sx = pauli_x();
        const OperatorMatrix u1 = expm_i_hermitian(p[0] * sz + p[1] * sy);
        const OperatorMatrix third = (variant == U2Variant::sigma1x) ? sx : sy;
        const OperatorMatrix u2 = expm_i_hermitian(p[2] * sz + p[3] * sy + p[4] * third);

        const Spin one(2);
        const OperatorMatrix j2z = jz(one);
        const OperatorMatrix b1 =
            OperatorMatrix::identity(3) - j2z * (j2z - OperatorMatrix::identity(3));
        const OperatorMatrix u = expm_i_hermitian(p[5] * j2z) * expm_i_hermitian(p[6] * jx(one));

        return ObservableTuple{DichotomicObservable(conjugate(u1, sz)),
                               DichotomicObservable(conjugate(u2, sz)),
                               DichotomicObservable(b1),
                               DichotomicObservable(conjugate(u, b1))};
    });
}

ObservableFamily qubit_qutrit_family_b(Su3Order order) {
    const std::string name =
        (order == Su3Order::blockwise) ? "family-b" : "family-b/interleaved";
    return ObservableFamily(name, 8, 2, 3, [order](std::span<const double> p) {
        auto reflection = [](double angle) {
            const double c = std::cos(angle), s = std::sin(angle);
            return OperatorMatrix{{Complex(c, 0.0), Complex(-s, 0.0)},
                                  {Complex(-s, 0.0), Complex(-c, 0.0)}};
        };

        const GellMannBasis su3 = gell_mann(3);
        // blockwise: L = (sym12, sym13, sym23, asym12, asym13, asym23) with
        // the product accumulated right to left, U = e^{ib6 L6}...e^{ib1 L1}.
        // With the p1 preset this combination lands at
        // 2 sqrt2 - F_B = 5.58e-4 for the theta1 = 3pi/4 X-state; the
        // interleaved forward reading e^{ib1 l1}...e^{ib6 l6} over
        // lambda(1,2,4,5,6,7) stays available as a variant.
        static constexpr int interleaved_idx[6] = {0, 3, 1, 4, 2, 5};
        static constexpr int blockwise_idx[6] = {0, 1, 2, 3, 4, 5};

        OperatorMatrix u = OperatorMatrix::identity(3);
        if (order == Su3Order::blockwise) {
            for (int k = 5; k >= 0; --k)
                u = u * expm_i_hermitian(p[static_cast<size_t>(2 + k)] *
                                         su3.generators[static_cast<size_t>(blockwise_idx[k])]);
        } else {
            for (int k = 0; k < 6; ++k)
                u = u * expm_i_hermitian(p[static_cast<size_t>(2 + k)] *
                                         su3.generators[static_cast<size_t>(interleaved_idx[k])]);
        }

        const OperatorMatrix b1 = OperatorMatrix::diagonal({1.0, -1.0, -1.0});
        const OperatorMatrix b2_seed = OperatorMatrix::diagonal({-1.0, 1.0, 1.0});

        return ObservableTuple{DichotomicObservable(reflection(p[0])),
                               DichotomicObservable(reflection(p[1])),
                               DichotomicObservable(b1),
                               DichotomicObservable(conjugate(u, b2_seed))};
    });
}

std::vector<double> family_a_set1_params() {
    return {0.5, 4.5, 5.0, 1.0, 17.0 / 4.0, 4.0 / 3.0, kPi};
}

std::vector<double> family_b_p1_params() {
    return {kPi / 4.0, 3.0 * kPi / 4.0, -kPi / 30.0, kPi / 2.0, 0.0,
            3.0 * kPi / 4.0, std::sqrt(3.0 / 5.0) * kPi, kPi / 40.0};
}

std::vector<double> family_b_p2_params() {
    return {kPi / 4.0, 3.0 * kPi / 4.0, -kPi / 125.0, kPi / 125.0, kPi / 2.0,
            7.0 * kPi / 8.0, kPi / 5.0, -3.0 * kPi / 10.0};
}

}  // namespace bellkit
