#include "bellkit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bellkit/detail/math_util.hpp"

namespace bellkit {

namespace {

using detail::ln_factorial;

// doubled value of a half-integer, rejecting anything else
int twice_int(double x, const char* what) {
    const double t = 2.0 * x;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-9) throw std::domain_error(std::string(what) + ": not a half-integer");
    return static_cast<int>(r);
}

}  // namespace

CoupledLabel::CoupledLabel(Spin j1, Spin j2, double j, double m)
    : j1_(j1), j2_(j2), twice_j_(twice_int(j, "CoupledLabel j")),
      twice_m_(twice_int(m, "CoupledLabel m")) {
    const int tj1 = j1.twice_j(), tj2 = j2.twice_j();
    if (twice_j_ < std::abs(tj1 - tj2) || twice_j_ > tj1 + tj2)
        throw std::domain_error("CoupledLabel: j violates the triangle rule");
    if ((tj1 + tj2 + twice_j_) % 2 != 0)
        throw std::domain_error("CoupledLabel: j1 + j2 + j must be an integer");
    if (std::abs(twice_m_) > twice_j_ || (twice_j_ + twice_m_) % 2 != 0)
        throw std::domain_error("CoupledLabel: m incompatible with j");
}

double clebsch_gordan(double j1, double m1, double j2, double m2, double j, double m) {
    const int tj1 = twice_int(j1, "clebsch_gordan j1"), tm1 = twice_int(m1, "clebsch_gordan m1");
    const int tj2 = twice_int(j2, "clebsch_gordan j2"), tm2 = twice_int(m2, "clebsch_gordan m2");
    const int tj = twice_int(j, "clebsch_gordan j"), tm = twice_int(m, "clebsch_gordan m");

    if (tj1 < 0 || tj2 < 0 || tj < 0) return 0.0;
    if (tm1 + tm2 != tm) return 0.0;
    if (tj < std::abs(tj1 - tj2) || tj > tj1 + tj2) return 0.0;
    if ((tj1 + tj2 + tj) % 2 != 0) return 0.0;
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm) > tj) return 0.0;
    if ((tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj + tm) % 2 != 0) return 0.0;

    // All factorial arguments below are integers for valid inputs.
    const int a1 = (tj1 + tj2 - tj) / 2;
    const int a2 = (tj1 - tj2 + tj) / 2;
    const int a3 = (-tj1 + tj2 + tj) / 2;
    const int a4 = (tj1 + tj2 + tj) / 2 + 1;

    const double ln_pre =
        0.5 * (std::log(tj + 1.0) + ln_factorial(a1) + ln_factorial(a2) + ln_factorial(a3) -
               ln_factorial(a4) + ln_factorial((tj1 + tm1) / 2) + ln_factorial((tj1 - tm1) / 2) +
               ln_factorial((tj2 + tm2) / 2) + ln_factorial((tj2 - tm2) / 2) +
               ln_factorial((tj + tm) / 2) + ln_factorial((tj - tm) / 2));

    const int t4_0 = (tj - tj2 + tm1) / 2;  // j - j2 + m1
    const int t5_0 = (tj - tj1 - tm2) / 2;  // j - j1 - m2
    const int kmin = std::max({0, -t4_0, -t5_0});
    const int kmax = std::min({a1, (tj1 - tm1) / 2, (tj2 + tm2) / 2});

    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double term = std::exp(ln_pre - ln_factorial(k) - ln_factorial(a1 - k) -
                                     ln_factorial((tj1 - tm1) / 2 - k) -
                                     ln_factorial((tj2 + tm2) / 2 - k) -
                                     ln_factorial(t4_0 + k) - ln_factorial(t5_0 + k));
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

double energy(const CoupledLabel& label, const FrequencyPair& freq) {
    const double j = label.j(), j1 = label.j1().j(), j2 = label.j2().j();
    return freq.omega0 * (j * (j + 1.0) - j1 * (j1 + 1.0) - j2 * (j2 + 1.0)) -
           freq.omega1 * label.m();
}

std::vector<Complex> eigenstate(const CoupledLabel& label, double t, const FrequencyPair& freq) {
    const Spin j1 = label.j1(), j2 = label.j2();
    const int d1 = j1.dim(), d2 = j2.dim();
    const double e = energy(label, freq);
    const Complex phase(std::cos(-e * t), std::sin(-e * t));

    std::vector<Complex> out(d1 * d2, Complex(0.0, 0.0));
    for (int k1 = 1; k1 <= d1; ++k1) {
        const double m1 = j1.m_of(k1);
        const double m2 = label.m() - m1;
        if (m2 < -j2.j() - 1e-9 || m2 > j2.j() + 1e-9) continue;
        const int k2 = static_cast<int>(std::round(j2.j() - m2)) + 1;
        const double cg = clebsch_gordan(j1.j(), m1, j2.j(), m2, label.j(), label.m());
        out[(k1 - 1) * d2 + (k2 - 1)] = phase * cg;
    }
    return out;
}

std::vector<Complex> psi_state(int k, double theta, double tau) {
    if (k < 1 || k > 3) throw std::domain_error("psi_state: k must be 1, 2 or 3");
    const double c = std::cos(theta), s = std::sin(theta);
    const Complex up(std::cos(0.5 * tau), std::sin(0.5 * tau));       // e^{+i tau/2}
    const Complex dn = std::conj(up);                                 // e^{-i tau/2}
    const Complex up3(std::cos(1.5 * tau), std::sin(1.5 * tau));      // e^{+3i tau/2}
    const Complex dn3 = std::conj(up3);

    const double r13 = std::sqrt(1.0 / 3.0), r23 = std::sqrt(2.0 / 3.0);
    switch (k) {
        case 1:
            return {up3 * c, 0.0, 0.0, 0.0, 0.0, dn3 * s};
        case 2:
            return {0.0, up * (r13 * c), dn * (r23 * s), up * (-r23 * c), dn * (-r13 * s), 0.0};
        default:
            return {0.0, up * (r23 * c), dn * (r13 * s), up * (r13 * c), dn * (r23 * s), 0.0};
    }
}

BipartiteState rho_of_tau(const MixtureSpec& spec) {
    const double p[3] = {spec.p1, spec.p2, spec.p3};
    const double theta[3] = {spec.theta1, spec.theta2, spec.theta3};
    double sum = 0.0;
    for (double pk : p) {
        if (pk < -1e-12) throw std::domain_error("rho_of_tau: negative probability");
        sum += pk;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::domain_error("rho_of_tau: probabilities must sum to 1");

    OperatorMatrix m(6);
    for (int k = 0; k < 3; ++k) {
        if (p[k] == 0.0) continue;
        const std::vector<Complex> psi = psi_state(k + 1, theta[k], spec.tau);
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) m(r, c) += p[k] * psi[r] * std::conj(psi[c]);
    }
    return BipartiteState(Spin(1), Spin(2), std::move(m));
}

BipartiteState xstate_p1(double theta1, double tau) {
    return rho_of_tau(MixtureSpec{1.0, 0.0, 0.0, theta1, 0.0, 0.0, tau});
}

}  // namespace bellkit
