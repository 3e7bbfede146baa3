#pragma once

#include <string>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/parallel.hpp"

namespace bellkit::scan {

// Uniform grid over [min, max] with steps >= 2 points, endpoints included.
struct GridAxis {
    double min = 0.0;
    double max = 1.0;
    int steps = 101;
    double value(int i) const { return min + (max - min) * i / (steps - 1); }
};

// Doubles are printed with 12 significant digits in every CSV.
std::string format_g12(double x);

// Bell factor, entanglement of formation and beta over the (alpha, gamma)
// slice of the Bell-basis family, beta = delta fixed by normalization.
// Grid points outside the unit disc are emitted with status "skip".
struct Fig1Config {
    GridAxis alpha{-1.0, 1.0, 101};
    GridAxis gamma{-1.0, 1.0, 101};
    ExecMode mode = ExecMode::parallel;
};
std::string run_fig1(const Fig1Config& config);

// Closed-form X-state Bell factor over the (r14 sin phi14, r23 sin phi23)
// square; rows that no PSD X-state can realize are marked infeasible, and
// feasible rows are cross-checked against the full Bell evaluation.
struct Fig2Config {
    GridAxis x{-0.5, 0.5, 101};
    GridAxis y{-0.5, 0.5, 101};
    ExecMode mode = ExecMode::parallel;
};
std::string run_fig2(const Fig2Config& config);

// The coupled-dynamics bundle: beta over the (p1, p2) simplex, the family-A
// Bell surface over (tau, theta1) for the p1 = 1 X-state, the theta1 =
// 3pi/2 +- 1e-3 slices, and the tau = pi slice carrying both F_B and beta.
struct Fig3Config {
    int steps = 101;
    double theta1 = 0.0, theta2 = 0.0, theta3 = 0.0;  // beta-surface mixing angles
    double tau = 0.0;                                 // beta-surface time
    std::vector<double> family_params;                // empty -> set1
    U2Variant variant = kDefaultU2Variant;
    ExecMode mode = ExecMode::parallel;
    Fig3Config();
};
struct Fig3Output {
    std::string beta_surface;
    std::string fb_surface;
    std::string theta_slices;
    std::string tau_pi_slice;
};
Fig3Output run_fig3(const Fig3Config& config);

// Family-B traces: F_B versus tau for the p1 = 1, theta1 = 3pi/4 X-state,
// and F_B versus theta2 for the p2 = 1 state at three tau values.
struct Fig4Config {
    int steps = 101;
    double theta1;                     // p1 trace mixing angle
    std::vector<double> p1_params;     // empty -> the built-in p1 preset
    std::vector<double> p2_params;     // empty -> the built-in p2 preset
    Su3Order order = kDefaultSu3Order;
    ExecMode mode = ExecMode::parallel;
    Fig4Config();
};
struct Fig4Output {
    std::string p1_trace;
    std::string p2_trace;
};
Fig4Output run_fig4(const Fig4Config& config);

}  // namespace bellkit::scan
