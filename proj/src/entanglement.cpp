#include "bellkit/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "bellkit/angmom.hpp"
#include "bellkit/hermitian_eig.hpp"

namespace bellkit {

namespace {

OperatorMatrix sigma_y_pair() {
    const OperatorMatrix sy{{Complex(0.0, 0.0), Complex(0.0, -1.0)},
                            {Complex(0.0, 1.0), Complex(0.0, 0.0)}};
    return kron(sy, sy);
}

// Sum_kl |M_kl|^2 for the correlation tensor of `state`.
double correlation_tensor_norm2(const BipartiteState& state) {
    const GellMannBasis b1 = gell_mann(state.dim1());
    const GellMannBasis b2 = gell_mann(state.dim2());
    const DensityMatrix r1 = reduce_second(state);
    const DensityMatrix r2 = reduce_first(state);

    std::vector<Complex> mean1, mean2;
    mean1.reserve(b1.generators.size());
    mean2.reserve(b2.generators.size());
    for (const auto& g : b1.generators) mean1.push_back((r1.mat() * g).trace());
    for (const auto& g : b2.generators) mean2.push_back((r2.mat() * g).trace());

    double sum = 0.0;
    for (size_t k = 0; k < b1.generators.size(); ++k)
        for (size_t l = 0; l < b2.generators.size(); ++l) {
            const Complex joint =
                (state.mat() * kron(b1.generators[k], b2.generators[l])).trace();
            sum += std::norm(joint - mean1[k] * mean2[l]);
        }
    return sum;
}

// Normalization anchor: Sum|M|^2 of the maximally entangled pure state of
// the smaller subsystem dimension, cached per (d1, d2).
double calibration_norm2(Spin j1, Spin j2) {
    static std::map<std::pair<int, int>, double> cache;
    static std::mutex mutex;
    const std::pair<int, int> key{j1.dim(), j2.dim()};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int d1 = j1.dim(), d2 = j2.dim();
    const int s = std::min(d1, d2);
    std::vector<Complex> amps(static_cast<size_t>(d1) * d2, Complex(0.0, 0.0));
    for (int i = 0; i < s; ++i)
        amps[static_cast<size_t>(i * d2 + i)] = 1.0 / std::sqrt(static_cast<double>(s));
    const double norm2 = correlation_tensor_norm2(pure_bipartite(j1, j2, amps));
    cache[key] = norm2;
    return norm2;
}

}  // namespace

double concurrence(const BipartiteState& state) {
    if (state.dim1() != 2 || state.dim2() != 2)
        throw std::domain_error("concurrence: requires a two-qubit state");
    const OperatorMatrix yy = sigma_y_pair();
    const OperatorMatrix rho_tilde = yy * state.mat().conj() * yy;
    // Eigenvalues of rho rho~ equal those of the Hermitian sqrt(rho) rho~ sqrt(rho).
    const OperatorMatrix s = sqrt_psd(state.mat());
    const EigenSystem es = eigh(s * rho_tilde * s);
    // Eigenvalues at rounding-noise level would inject sqrt(eps)-sized
    // errors into the mu's; clip them before the square root.
    const double floor = 1e-14 * std::max(es.values.back(), 0.0);
    std::vector<double> mu;
    mu.reserve(4);
    for (double w : es.values) mu.push_back(w > floor ? std::sqrt(w) : 0.0);
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

double eof_from_concurrence(double c) {
    if (c < 0.0 || c > 1.0 + 1e-12)
        throw std::domain_error("eof_from_concurrence: C outside [0, 1]");
    c = std::min(c, 1.0);
    const double root = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double xp = 0.5 * (1.0 + root);
    const double xm = 0.5 * (1.0 - root);
    auto h = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
    return h(xp) + h(xm);
}

double entanglement_of_formation(const BipartiteState& state) {
    return eof_from_concurrence(concurrence(state));
}

double schlienz_mahler_beta(const BipartiteState& state) {
    return correlation_tensor_norm2(state) / calibration_norm2(state.j1(), state.j2());
}

EntanglementReport entanglement_report(const BipartiteState& state) {
    EntanglementReport report;
    if (state.dim1() == 2 && state.dim2() == 2) {
        report.concurrence = concurrence(state);
        report.eof = eof_from_concurrence(*report.concurrence);
    }
    report.beta = schlienz_mahler_beta(state);
    report.negativity = negativity(state);
    return report;
}

}  // namespace bellkit
