#pragma once

#include <optional>

#include "bellkit/bipartite.hpp"

namespace bellkit {

// Wootters concurrence of a two-qubit state (pure or mixed):
// C = max(0, mu1 - mu2 - mu3 - mu4), mu_i the decreasing square roots of the
// eigenvalues of rho (sy(x)sy) rho* (sy(x)sy).
double concurrence(const BipartiteState& state);

// E_F = -x+ log2 x+ - x- log2 x- with x_pm = (1 pm sqrt(1-C^2))/2; 0 log 0 = 0.
double eof_from_concurrence(double c);
double entanglement_of_formation(const BipartiteState& state);

// Schlienz-Mahler entanglement parameter: the squared norm of the
// correlation tensor M_kl = <L_k (x) L_l> - <L_k><L_l>, scaled so the
// maximally entangled pure state of the smaller subsystem dimension gives 1.
double schlienz_mahler_beta(const BipartiteState& state);

struct EntanglementReport {
    std::optional<double> concurrence;  // two-qubit only
    std::optional<double> eof;          // two-qubit only
    double beta = 0.0;
    double negativity = 0.0;
};

EntanglementReport entanglement_report(const BipartiteState& state);

}  // namespace bellkit
