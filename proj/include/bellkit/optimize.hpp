#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bellkit/bell.hpp"

namespace bellkit {

struct SimplexResult {
    std::vector<double> x;
    double f = 0.0;
    long evaluations = 0;
};

// Function-value-only Nelder-Mead minimizer. Stops when the simplex
// diameter (max infinity-norm distance from the best vertex) drops below
// `tol` or the evaluation budget is exhausted.
SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> x0, double step, double tol,
                          long max_evals);

struct OptimizeConfig {
    int starts = 16;
    long max_evals = 4000;  // per start
    std::uint64_t seed = 0;
    // Per-parameter sampling box; empty means [0, 2pi) for every parameter.
    std::vector<std::pair<double, double>> init_box;
    // When set, start 0 begins here instead of sampling (local polish).
    std::optional<std::vector<double>> first_start;
    double simplex_tol = 1e-8;
};

struct BellResult {
    double f_b = 0.0;
    std::vector<double> params;
    long evaluations = 0;
    std::string family;
};

// Multi-start derivative-free maximization of the Bell factor over the
// family parameters. Deterministic: per-start RNG streams are derived from
// (seed, start index), and the winner is chosen by largest f_b with ties
// broken by lowest start index, independent of execution interleaving.
// Starts run concurrently when OpenMP is enabled.
BellResult optimize_bell(const BipartiteState& state, const ObservableFamily& family,
                         const OptimizeConfig& config);

}  // namespace bellkit
