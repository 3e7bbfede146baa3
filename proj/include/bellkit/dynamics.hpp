#pragma once

#include <vector>

#include "bellkit/bipartite.hpp"

namespace bellkit {

// Frequencies of the coupled-spin Hamiltonian H = 2 w0 J1.J2 - w1 Jz.
// The regime of interest has w1 << w0, but that is not enforced.
struct FrequencyPair {
    double omega0 = 0.0;
    double omega1 = 0.0;
};

// Coupled-basis label |j1, j2; j m>, stored as doubled integers.
class CoupledLabel {
public:
    CoupledLabel(Spin j1, Spin j2, double j, double m);

    Spin j1() const { return j1_; }
    Spin j2() const { return j2_; }
    double j() const { return 0.5 * twice_j_; }
    double m() const { return 0.5 * twice_m_; }

private:
    Spin j1_, j2_;
    int twice_j_, twice_m_;
};

// <j1 m1 j2 m2 | j m> in the Condon-Shortley convention, via the Racah
// closed-form sum. Zero when m != m1+m2 or the triangle rule fails;
// non-half-integer input is rejected.
double clebsch_gordan(double j1, double m1, double j2, double m2, double j, double m);

// E = w0 { j(j+1) - j1(j1+1) - j2(j2+1) } - w1 m.
double energy(const CoupledLabel& label, const FrequencyPair& freq);

// |phi_{j1 j2 j m}(t)> = sum_m1 CG e^{-iEt} |j1 m1>|j2, m-m1> in the
// uncoupled product basis, global phase included.
std::vector<Complex> eigenstate(const CoupledLabel& label, double t, const FrequencyPair& freq);

// The three (1/2, 1) eigenstate superpositions Psi_k(theta, tau), global
// phases dropped and tau = w1 t dimensionless; unit 6-vectors.
std::vector<Complex> psi_state(int k, double theta, double tau);

// Convex mixture rho(tau) = sum_k p_k |Psi_k><Psi_k| of the (1/2, 1) system.
struct MixtureSpec {
    double p1 = 1.0, p2 = 0.0, p3 = 0.0;
    double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0;
    double tau = 0.0;
};

BipartiteState rho_of_tau(const MixtureSpec& spec);

// The p1 = 1 member: an X-type 6x6 with cos^2/sin^2 corners and
// e^{+-3i tau} cos sin anti-corners.
BipartiteState xstate_p1(double theta1, double tau);

}  // namespace bellkit
