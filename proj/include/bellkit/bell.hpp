#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bellkit/bipartite.hpp"

namespace bellkit {

OperatorMatrix pauli_x();
OperatorMatrix pauli_y();
OperatorMatrix pauli_z();

// Hermitian observable with eigenvalues +-1, enforced via ||A^2 - I|| <= 1e-10.
class DichotomicObservable {
public:
    static constexpr double kTol = 1e-10;
    explicit DichotomicObservable(OperatorMatrix mat);
    const OperatorMatrix& mat() const { return mat_; }
    int dim() const { return mat_.dim(); }

private:
    OperatorMatrix mat_;
};

struct ObservableTuple {
    DichotomicObservable a1, a2, b1, b2;
};

// Parametrized map from a real parameter vector to measurement settings
// (A1, A2) for the first subsystem and (B1, B2) for the second.
class ObservableFamily {
public:
    ObservableFamily(std::string name, int arity, int dim_a, int dim_b,
                     std::function<ObservableTuple(std::span<const double>)> build)
        : name_(std::move(name)), arity_(arity), dim_a_(dim_a), dim_b_(dim_b),
          build_(std::move(build)) {}

    const std::string& name() const { return name_; }
    int arity() const { return arity_; }
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    ObservableTuple build(std::span<const double> params) const;

private:
    std::string name_;
    int arity_;
    int dim_a_, dim_b_;
    std::function<ObservableTuple(std::span<const double>)> build_;
};

// E(A, B) = Tr(rho (A (x) B)); the imaginary residue is checked against
// 1e-10 and discarded.
double correlation(const BipartiteState& state, const DichotomicObservable& a,
                   const DichotomicObservable& b);

// F_B = |E(A1,B1) + E(A1,B2) - E(A2,B1) + E(A2,B2)|.
double bell_parameter(const BipartiteState& state, const ObservableTuple& obs);

// A1 = sz, A2 = sx, B1 = (sx+sz)/sqrt2, B2 = (sx-sz)/sqrt2.
ObservableTuple standard_two_qubit_observables();

// X-state settings: A1 = sy, A2 = sx, same B pair.
ObservableTuple xstate_observables();

bool is_x_state(const BipartiteState& state, double tol = 1e-12);

// For an X-state with the xstate_observables settings the Bell factor
// collapses to F_B = 2 sqrt2 |r14 sin(phi14) + r23 sin(phi23)| where
// r14 e^{i phi14} = <s+ (x) s+> and r23 e^{i phi23} = <s+ (x) s->.
double xstate_bell_closed_form(const BipartiteState& state);

// Analytic two-qubit maximum 2 sqrt(m1 + m2) over all dichotomic settings,
// m1, m2 the two largest eigenvalues of T^t T with T_kl = Tr(rho sk (x) sl).
double horodecki_max_bell(const BipartiteState& state);

// |Psi> = alpha |phi+> + beta |phi-> + gamma |psi-> + delta |psi+> as a
// two-qubit pure state (coefficients normalized internally).
BipartiteState bell_basis_state(Complex alpha, Complex beta, Complex gamma, Complex delta);

// Reading of the unlabelled third term in the generator of u2 (family A):
// sigma1x completes an su(2) triple, sigma1y duplicates the second term.
enum class U2Variant { sigma1x, sigma1y };

// Convention of the six-exponential su(3) unitary in family B. blockwise
// (the default) uses the symmetric triple then the antisymmetric triple
// with the product accumulated right to left; interleaved is the standard
// lambda1,2,4,5,6,7 order applied left to right, kept as an alternative.
enum class Su3Order { blockwise, interleaved };

inline constexpr U2Variant kDefaultU2Variant = U2Variant::sigma1x;
inline constexpr Su3Order kDefaultSu3Order = Su3Order::blockwise;

// Fully general single-qubit settings n.sigma per observable; 8 parameters
// (polar, azimuth) x 4. Reaches the horodecki_max_bell bound.
ObservableFamily qubit_rotation_family();

// Qubit-qutrit family with A_l = u_l s1z u_l^dag and B1 = I - J2z(J2z - 1),
// B2 = U B1 U^dag; 7 parameters (alpha1..alpha5, beta1, beta2).
ObservableFamily qubit_qutrit_family_a(U2Variant variant = kDefaultU2Variant);

// Qubit-qutrit family with reflection-type qubit settings and
// B2 = U Diag(-1,1,1) U^dag, U a product of six su(3) exponentials;
// 8 parameters (alpha, c, b1..b6).
ObservableFamily qubit_qutrit_family_b(Su3Order order = kDefaultSu3Order);

// Built-in parameter presets for the two families.
std::vector<double> family_a_set1_params();
std::vector<double> family_b_p1_params();
std::vector<double> family_b_p2_params();

}  // namespace bellkit
