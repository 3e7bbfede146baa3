#include "bellkit/scan.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "bellkit/dynamics.hpp"
#include "bellkit/entanglement.hpp"

namespace bellkit::scan {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryTol = 1e-9;

const char* region_of(double f_b) {
    if (std::abs(f_b - 2.0) <= kBoundaryTol) return "boundary";
    return f_b > 2.0 ? "violation" : "classical";
}

std::string join_rows(const std::string& header, const std::vector<std::string>& rows) {
    std::string out = header;
    out.push_back('\n');
    for (const std::string& r : rows) {
        out += r;
        out.push_back('\n');
    }
    return out;
}

}  // namespace

std::string format_g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string run_fig1(const Fig1Config& config) {
    if (config.alpha.steps < 2 || config.gamma.steps < 2)
        throw std::domain_error("run_fig1: grid axes need at least 2 steps");
    const ObservableTuple obs = standard_two_qubit_observables();
    const long n = static_cast<long>(config.alpha.steps) * config.gamma.steps;
    std::vector<std::string> rows(n);

    for_each_index(n, config.mode, [&](long i) {
        const int ia = static_cast<int>(i) / config.gamma.steps;
        const int ig = static_cast<int>(i) % config.gamma.steps;
        const double alpha = config.alpha.value(ia);
        const double gamma = config.gamma.value(ig);
        const double rest = 1.0 - alpha * alpha - gamma * gamma;
        std::string& row = rows[i];
        row = format_g12(alpha) + "," + format_g12(gamma) + ",";
        if (rest < -1e-12) {
            row += "nan,nan,nan,skip";
            return;
        }
        const double bd = std::sqrt(std::max(rest, 0.0) / 2.0);  // beta = delta
        const BipartiteState state = bell_basis_state(alpha, bd, gamma, bd);
        const double f_b = bell_parameter(state, obs);
        const double e_f = entanglement_of_formation(state);
        const double beta_ent = schlienz_mahler_beta(state);
        row += format_g12(f_b) + "," + format_g12(e_f) + "," + format_g12(beta_ent) + "," +
               region_of(f_b);
    });
    return join_rows("alpha,gamma,f_b,e_f,beta,status", rows);
}

std::string run_fig2(const Fig2Config& config) {
    if (config.x.steps < 2 || config.y.steps < 2)
        throw std::domain_error("run_fig2: grid axes need at least 2 steps");
    const ObservableTuple obs = xstate_observables();
    const long n = static_cast<long>(config.x.steps) * config.y.steps;
    std::vector<std::string> rows(n);

    for_each_index(n, config.mode, [&](long i) {
        const int ix = static_cast<int>(i) / config.y.steps;
        const int iy = static_cast<int>(i) % config.y.steps;
        const double x = config.x.value(ix);  // r14 sin phi14
        const double y = config.y.value(iy);  // r23 sin phi23
        const double f_b = 2.0 * std::sqrt(2.0) * std::abs(x + y);

        // A PSD X-state with these imaginary parts exists iff |x|+|y| <= 1/2.
        const bool feasible = std::abs(x) + std::abs(y) <= 0.5 + 1e-12;
        if (feasible) {
            const double slack = 0.5 - std::abs(x) - std::abs(y);
            const double a = std::abs(x) + 0.5 * std::max(slack, 0.0);
            const double b = 0.5 - a;
            OperatorMatrix m(4);
            m(0, 0) = a;
            m(3, 3) = a;
            m(1, 1) = b;
            m(2, 2) = b;
            m(3, 0) = Complex(0.0, x);
            m(0, 3) = Complex(0.0, -x);
            m(2, 1) = Complex(0.0, y);
            m(1, 2) = Complex(0.0, -y);
            const BipartiteState state(Spin(1), Spin(1), std::move(m));
            const double f_check = bell_parameter(state, obs);
            if (std::abs(f_check - f_b) > 1e-10)
                throw std::runtime_error("run_fig2: closed form and Bell evaluation disagree");
        }
        rows[i] = format_g12(x) + "," + format_g12(y) + "," + format_g12(f_b) + "," +
                  (feasible ? "1" : "0") + "," + region_of(f_b);
    });
    return join_rows("r14_sin_phi14,r23_sin_phi23,f_b,feasible,status", rows);
}

Fig3Config::Fig3Config()
    : theta1(kPi / 4.0), theta2(kPi / 4.0), theta3(kPi / 4.0),
      family_params(family_a_set1_params()) {}

Fig3Output run_fig3(const Fig3Config& config) {
    if (config.steps < 2) throw std::domain_error("run_fig3: steps must be at least 2");
    const ObservableFamily family = qubit_qutrit_family_a(config.variant);
    const ObservableTuple obs = family.build(config.family_params);
    const int steps = config.steps;
    Fig3Output out;

    // beta over the (p1, p2) simplex
    {
        const GridAxis p_axis{0.0, 1.0, steps};
        const long n = static_cast<long>(steps) * steps;
        std::vector<std::string> rows(n);
        for_each_index(n, config.mode, [&](long i) {
            const double p1 = p_axis.value(static_cast<int>(i) / steps);
            const double p2 = p_axis.value(static_cast<int>(i) % steps);
            if (p1 + p2 > 1.0 + 1e-12) return;  // outside the simplex
            MixtureSpec spec;
            spec.p1 = p1;
            spec.p2 = p2;
            spec.p3 = std::max(0.0, 1.0 - p1 - p2);
            spec.theta1 = config.theta1;
            spec.theta2 = config.theta2;
            spec.theta3 = config.theta3;
            spec.tau = config.tau;
            const double beta = schlienz_mahler_beta(rho_of_tau(spec));
            rows[i] = format_g12(p1) + "," + format_g12(p2) + "," + format_g12(beta);
        });
        std::vector<std::string> kept;
        kept.reserve(rows.size());
        for (std::string& r : rows)
            if (!r.empty()) kept.push_back(std::move(r));
        out.beta_surface = join_rows("p1,p2,beta", kept);
    }

    // F_B over (tau, theta1) for the p1 = 1 X-state
    {
        const GridAxis tau_axis{0.0, 2.0 * kPi, steps};
        const GridAxis th_axis{0.0, 2.0 * kPi, steps};
        const long n = static_cast<long>(steps) * steps;
        std::vector<std::string> rows(n);
        for_each_index(n, config.mode, [&](long i) {
            const double tau = tau_axis.value(static_cast<int>(i) / steps);
            const double th = th_axis.value(static_cast<int>(i) % steps);
            const double f_b = bell_parameter(xstate_p1(th, tau), obs);
            rows[i] = format_g12(tau) + "," + format_g12(th) + "," + format_g12(f_b) + "," +
                      region_of(f_b);
        });
        out.fb_surface = join_rows("tau,theta1,f_b,status", rows);
    }

    // theta1 = 3pi/2 and the +-1e-3 neighbours, F_B versus tau
    {
        const GridAxis tau_axis{0.0, 2.0 * kPi, steps};
        const double th0 = 3.0 * kPi / 2.0;
        std::vector<std::string> rows(steps);
        for_each_index(steps, config.mode, [&](long i) {
            const double tau = tau_axis.value(static_cast<int>(i));
            const double lo = bell_parameter(xstate_p1(th0 - 1e-3, tau), obs);
            const double mid = bell_parameter(xstate_p1(th0, tau), obs);
            const double hi = bell_parameter(xstate_p1(th0 + 1e-3, tau), obs);
            rows[i] = format_g12(tau) + "," + format_g12(lo) + "," + format_g12(mid) + "," +
                      format_g12(hi);
        });
        out.theta_slices = join_rows("tau,f_b_theta_minus,f_b_theta_center,f_b_theta_plus", rows);
    }

    // tau = pi slice: F_B and beta versus theta1
    {
        const GridAxis th_axis{0.0, 2.0 * kPi, steps};
        std::vector<std::string> rows(steps);
        for_each_index(steps, config.mode, [&](long i) {
            const double th = th_axis.value(static_cast<int>(i));
            const BipartiteState state = xstate_p1(th, kPi);
            const double f_b = bell_parameter(state, obs);
            const double beta = schlienz_mahler_beta(state);
            rows[i] = format_g12(th) + "," + format_g12(f_b) + "," + format_g12(beta);
        });
        out.tau_pi_slice = join_rows("theta1,f_b,beta", rows);
    }
    return out;
}

Fig4Config::Fig4Config()
    : theta1(3.0 * kPi / 4.0), p1_params(family_b_p1_params()), p2_params(family_b_p2_params()) {}

Fig4Output run_fig4(const Fig4Config& config) {
    if (config.steps < 2) throw std::domain_error("run_fig4: steps must be at least 2");
    const ObservableFamily family = qubit_qutrit_family_b(config.order);
    const ObservableTuple obs_p1 = family.build(config.p1_params);
    const ObservableTuple obs_p2 = family.build(config.p2_params);
    const int steps = config.steps;
    Fig4Output out;

    {
        const GridAxis tau_axis{0.0, 2.0 * kPi, steps};
        std::vector<std::string> rows(steps);
        for_each_index(steps, config.mode, [&](long i) {
            const double tau = tau_axis.value(static_cast<int>(i));
            const double f_b = bell_parameter(xstate_p1(config.theta1, tau), obs_p1);
            rows[i] = format_g12(tau) + "," + format_g12(f_b) + "," + region_of(f_b);
        });
        out.p1_trace = join_rows("tau,f_b,status", rows);
    }

    {
        const GridAxis th_axis{0.0, 2.0 * kPi, steps};
        const double taus[3] = {0.0, 0.5 * kPi, kPi};
        std::vector<std::string> rows(steps);
        for_each_index(steps, config.mode, [&](long i) {
            const double th2 = th_axis.value(static_cast<int>(i));
            double f[3];
            for (int t = 0; t < 3; ++t) {
                MixtureSpec spec;
                spec.p1 = 0.0;
                spec.p2 = 1.0;
                spec.p3 = 0.0;
                spec.theta2 = th2;
                spec.tau = taus[t];
                f[t] = bell_parameter(rho_of_tau(spec), obs_p2);
            }
            rows[i] = format_g12(th2) + "," + format_g12(f[0]) + "," + format_g12(f[1]) + "," +
                      format_g12(f[2]) + "," + region_of(f[0]);
        });
        out.p2_trace = join_rows("theta2,f_b_tau0,f_b_tau_half_pi,f_b_tau_pi,status", rows);
    }
    return out;
}

}  // namespace bellkit::scan
