#include "bellkit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bellkit/parallel.hpp"

namespace bellkit {

namespace {

// splitmix64: tiny, deterministic across platforms, one stream per start.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

SimplexResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                          std::span<const double> x0, double step, double tol,
                          long max_evals) {
    const int n = static_cast<int>(x0.size());
    if (n < 1) throw std::domain_error("nelder_mead: empty parameter vector");

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::vector<std::vector<double>> x(n + 1, std::vector<double>(x0.begin(), x0.end()));
    for (int i = 0; i < n; ++i) x[i + 1][i] += step;

    long evals = 0;
    auto eval = [&](const std::vector<double>& p) {
        ++evals;
        return f(p);
    };

    std::vector<double> fx(n + 1);
    for (int i = 0; i <= n; ++i) fx[i] = eval(x[i]);

    std::vector<int> idx(n + 1);
    std::vector<double> xc(n), xr(n), xe(n), xk(n);

    while (evals < max_evals) {
        for (int i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (fx[a] != fx[b]) return fx[a] < fx[b];
            return a < b;
        });

        // simplex diameter measured from the best vertex
        const std::vector<double>& best = x[idx[0]];
        double diameter = 0.0;
        for (int i = 1; i <= n; ++i)
            for (int d = 0; d < n; ++d)
                diameter = std::max(diameter, std::abs(x[idx[i]][d] - best[d]));
        if (diameter < tol) break;

        // centroid excluding the worst vertex
        for (int d = 0; d < n; ++d) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += x[idx[i]][d];
            xc[d] = s / n;
        }

        const std::vector<double>& worst = x[idx[n]];
        const double fbest = fx[idx[0]];
        const double fsecond = fx[idx[n - 1]];
        const double fworst = fx[idx[n]];

        // reflection
        for (int d = 0; d < n; ++d) xr[d] = xc[d] + alpha * (xc[d] - worst[d]);
        const double fr = eval(xr);

        if (fr < fbest) {
            // expansion
            for (int d = 0; d < n; ++d) xe[d] = xc[d] + gamma * (xr[d] - xc[d]);
            const double fe = eval(xe);
            if (fe < fr) {
                x[idx[n]] = xe;
                fx[idx[n]] = fe;
            } else {
                x[idx[n]] = xr;
                fx[idx[n]] = fr;
            }
            continue;
        }
        if (fr < fsecond) {
            x[idx[n]] = xr;
            fx[idx[n]] = fr;
            continue;
        }

        // contraction (outside toward the reflected point, inside toward worst)
        const bool outside = fr < fworst;
        for (int d = 0; d < n; ++d)
            xk[d] = xc[d] + rho * ((outside ? xr[d] : worst[d]) - xc[d]);
        const double fk = eval(xk);
        if (fk < (outside ? fr : fworst)) {
            x[idx[n]] = xk;
            fx[idx[n]] = fk;
            continue;
        }

        // shrink toward best
        for (int i = 1; i <= n; ++i) {
            for (int d = 0; d < n; ++d) x[idx[i]][d] = best[d] + sigma * (x[idx[i]][d] - best[d]);
            fx[idx[i]] = eval(x[idx[i]]);
            if (evals >= max_evals) break;
        }
    }

    int best_i = 0;
    for (int i = 1; i <= n; ++i)
        if (fx[i] < fx[best_i]) best_i = i;
    return SimplexResult{x[best_i], fx[best_i], evals};
}

BellResult optimize_bell(const BipartiteState& state, const ObservableFamily& family,
                         const OptimizeConfig& config) {
    const int arity = family.arity();
    if (!config.init_box.empty() && static_cast<int>(config.init_box.size()) != arity)
        throw std::domain_error("optimize_bell: init_box size does not match family arity");
    if (config.first_start && static_cast<int>(config.first_start->size()) != arity)
        throw std::domain_error("optimize_bell: first_start size does not match family arity");
    if (config.starts < 1) throw std::domain_error("optimize_bell: starts must be >= 1");
    if (state.dim1() != family.dim_a() || state.dim2() != family.dim_b())
        throw std::domain_error("optimize_bell: family dimensions do not match state");

    std::vector<std::pair<double, double>> box = config.init_box;
    if (box.empty()) box.assign(arity, {0.0, 2.0 * std::numbers::pi});

    double step = 0.0;
    for (const auto& [lo, hi] : box) step = std::max(step, hi - lo);
    step *= 0.25;
    if (step <= 0.0) step = 0.25;

    auto objective = [&](std::span<const double> p) {
        return -bell_parameter(state, family.build(p));
    };

    std::vector<SimplexResult> results(config.starts);
    for_each_index(config.starts, ExecMode::parallel, [&](long i) {
        SplitMix64 rng{config.seed * 0x9e3779b97f4a7c15ULL +
                       0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(i) + 1)};
        std::vector<double> x0(arity);
        if (i == 0 && config.first_start) {
            x0 = *config.first_start;
        } else {
            for (int k = 0; k < arity; ++k)
                x0[k] = box[k].first + (box[k].second - box[k].first) * rng.uniform();
        }
        results[i] = nelder_mead(objective, x0, step, config.simplex_tol, config.max_evals);
    });

    // winner: largest Bell factor, ties broken by lowest start index
    long total_evals = 0;
    int winner = 0;
    for (int i = 0; i < config.starts; ++i) {
        total_evals += results[i].evaluations;
        if (results[i].f < results[winner].f) winner = i;
    }
    return BellResult{-results[winner].f, results[winner].x, total_evals, family.name()};
}

}  // namespace bellkit
