#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bellkit/bell.hpp"
#include "bellkit/dynamics.hpp"
#include "bellkit/entanglement.hpp"
#include "test_support.hpp"

using namespace bellkit;
using testsupport::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force correlation-tensor oracle with hardcoded generators, kept
// independent of the angmom construction.
double beta_oracle_qubit_qutrit(const BipartiteState& st) {
    // Pauli matrices
    std::vector<OperatorMatrix> g2 = {
        {{0.0, 1.0}, {1.0, 0.0}},
        {{Complex(0, 0), Complex(0, -1)}, {Complex(0, 1), Complex(0, 0)}},
        {{1.0, 0.0}, {0.0, -1.0}}};
    // standard Gell-Mann matrices
    std::vector<OperatorMatrix> g3;
    auto sym = [](int a, int b) {
        OperatorMatrix m(3);
        m(a, b) = 1.0;
        m(b, a) = 1.0;
        return m;
    };
    auto asym = [](int a, int b) {
        OperatorMatrix m(3);
        m(a, b) = Complex(0, -1);
        m(b, a) = Complex(0, 1);
        return m;
    };
    g3.push_back(sym(0, 1));
    g3.push_back(asym(0, 1));
    g3.push_back(OperatorMatrix::diagonal({1.0, -1.0, 0.0}));
    g3.push_back(sym(0, 2));
    g3.push_back(asym(0, 2));
    g3.push_back(sym(1, 2));
    g3.push_back(asym(1, 2));
    const double s3 = 1.0 / std::sqrt(3.0);
    g3.push_back(OperatorMatrix::diagonal({s3, s3, -2.0 * s3}));

    auto tensor_norm2 = [&](const OperatorMatrix& rho) {
        double sum = 0.0;
        for (const auto& a : g2)
            for (const auto& b : g3) {
                const Complex joint = (rho * kron(a, b)).trace();
                const Complex m1 = (rho * kron(a, OperatorMatrix::identity(3))).trace();
                const Complex m2 = (rho * kron(OperatorMatrix::identity(2), b)).trace();
                sum += std::norm(joint - m1 * m2);
            }
        return sum;
    };

    // calibration: maximally entangled state of the smaller dimension
    OperatorMatrix phi(6);
    const int pairs[2] = {0, 4};  // |0,0> and |1,1> composite indices
    for (int a : pairs)
        for (int b : pairs) phi(a, b) = 0.5;
    return tensor_norm2(st.mat()) / tensor_norm2(phi);
}

}  // namespace

TEST_CASE("concurrence") {
    Rng rng(3);
    SUBCASE("pure product state has zero concurrence") {
        const Complex amps[4] = {1.0, 0.0, 0.0, 0.0};
        CHECK(concurrence(pure_bipartite(Spin(1), Spin(1), amps)) < 1e-10);
    }
    SUBCASE("Bell state has concurrence 1") {
        CHECK(concurrence(bell_basis_state(1.0, 0.0, 0.0, 0.0)) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("pure-state oracle C = 2|ad - bc|") {
        for (int trial = 0; trial < 50; ++trial) {
            Complex amps[4];
            for (Complex& a : amps) a = rng.cnormal();
            double n = 0.0;
            for (const Complex& a : amps) n += std::norm(a);
            for (Complex& a : amps) a /= std::sqrt(n);
            const double oracle = 2.0 * std::abs(amps[0] * amps[3] - amps[1] * amps[2]);
            CHECK(concurrence(pure_bipartite(Spin(1), Spin(1), amps)) ==
                  doctest::Approx(oracle).epsilon(1e-7));
        }
    }
    SUBCASE("Bell-basis family with real coefficients") {
        for (int trial = 0; trial < 20; ++trial) {
            double c[4];
            double n = 0.0;
            for (double& x : c) {
                x = rng.normal();
                n += x * x;
            }
            for (double& x : c) x /= std::sqrt(n);
            const BipartiteState st = bell_basis_state(c[0], c[1], c[2], c[3]);
            const double s2 = 1.0 / std::sqrt(2.0);
            const Complex a = (c[0] + c[1]) * s2, b = (c[2] + c[3]) * s2,
                          cc = (c[3] - c[2]) * s2, d = (c[0] - c[1]) * s2;
            CHECK(concurrence(st) ==
                  doctest::Approx(2.0 * std::abs(a * d - b * cc)).epsilon(1e-7));
        }
    }
    SUBCASE("non-two-qubit rejected") {
        const BipartiteState st = testsupport::random_bipartite(rng, Spin(1), Spin(2));
        CHECK_THROWS_AS(concurrence(st), std::domain_error);
    }
}

TEST_CASE("entanglement of formation") {
    SUBCASE("endpoints") {
        CHECK(eof_from_concurrence(0.0) == 0.0);
        CHECK(eof_from_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("C = 0.6 evaluates the x_pm formula") {
        // x_pm = (1 +- 0.8)/2 -> -0.9 log2 0.9 - 0.1 log2 0.1
        const double expected = -0.9 * std::log2(0.9) - 0.1 * std::log2(0.1);
        CHECK(expected == doctest::Approx(0.468995593589).epsilon(1e-10));
        CHECK(eof_from_concurrence(0.6) == doctest::Approx(expected).epsilon(1e-14));
    }
    SUBCASE("monotone nondecreasing on the C grid") {
        double prev = -1.0;
        for (int i = 0; i <= 10; ++i) {
            const double v = eof_from_concurrence(0.1 * i);
            CHECK(v >= prev);
            prev = v;
        }
    }
    SUBCASE("eof and concurrence vanish together") {
        Rng rng(29);
        for (int trial = 0; trial < 20; ++trial) {
            const BipartiteState st = testsupport::random_bipartite(rng, Spin(1), Spin(1));
            const double c = concurrence(st);
            const double e = entanglement_of_formation(st);
            if (c < 1e-12) CHECK(e < 1e-10);
            if (e < 1e-12) CHECK(c < 1e-10);
        }
    }
}

TEST_CASE("schlienz-mahler beta") {
    Rng rng(37);
    SUBCASE("product states: beta and negativity both vanish") {
        const int twojs[3] = {1, 2, 1};
        for (int t1 : twojs)
            for (int t2 : twojs)
                for (int trial = 0; trial < 12; ++trial) {
                    const DensityMatrix a = testsupport::random_density(rng, Spin(t1));
                    const DensityMatrix b = testsupport::random_density(rng, Spin(t2));
                    const BipartiteState st = compose_product(a, b);
                    CHECK(schlienz_mahler_beta(st) < 1e-10);
                    CHECK(negativity(st) < 1e-10);
                }
    }
    SUBCASE("Bell state calibrates to 1; brute-force tensor sum is 3") {
        const BipartiteState phi = bell_basis_state(1.0, 0.0, 0.0, 0.0);
        CHECK(schlienz_mahler_beta(phi) == doctest::Approx(1.0).epsilon(1e-12));
        // independent sum over Pauli pairs
        const OperatorMatrix paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
        double sum = 0.0;
        for (const auto& a : paulis)
            for (const auto& b : paulis) sum += std::norm((phi.mat() * kron(a, b)).trace());
        CHECK(sum == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("local unitary invariance") {
        for (int trial = 0; trial < 3; ++trial) {
            const BipartiteState st = testsupport::random_bipartite(rng, Spin(1), Spin(2));
            const double base = schlienz_mahler_beta(st);
            for (int u = 0; u < 20; ++u) {
                const OperatorMatrix local =
                    kron(testsupport::random_unitary(rng, 2), testsupport::random_unitary(rng, 3));
                const BipartiteState rotated(Spin(1), Spin(2),
                                             local * st.mat() * local.dagger());
                CHECK(schlienz_mahler_beta(rotated) == doctest::Approx(base).epsilon(1e-10));
            }
        }
    }
    SUBCASE("Psi2(pi/4, 0) regression value against the brute-force oracle") {
        MixtureSpec spec;
        spec.p1 = 0.0;
        spec.p2 = 1.0;
        spec.p3 = 0.0;
        spec.theta2 = kPi / 4.0;
        spec.tau = 0.0;
        const BipartiteState st = rho_of_tau(spec);
        const double impl = schlienz_mahler_beta(st);
        CHECK(impl == doctest::Approx(beta_oracle_qubit_qutrit(st)).epsilon(1e-10));
        CHECK(impl == doctest::Approx(0.855967078189).epsilon(1e-9));
        CHECK(impl > 0.0);
        CHECK(impl <= 1.0);
    }
    SUBCASE("E_F maxima include the |alpha gamma| = 1/2 periphery") {
        const double s2 = 1.0 / std::sqrt(2.0);
        double grid_max = 0.0;
        for (int ia = 0; ia <= 20; ++ia)
            for (int ig = 0; ig <= 20; ++ig) {
                const double a = -1.0 + 0.1 * ia, g = -1.0 + 0.1 * ig;
                const double rest = 1.0 - a * a - g * g;
                if (rest < 0) continue;
                const double bd = std::sqrt(rest / 2.0);
                grid_max = std::max(
                    grid_max, entanglement_of_formation(bell_basis_state(a, bd, g, bd)));
            }
        const double periphery = entanglement_of_formation(bell_basis_state(s2, 0.0, s2, 0.0));
        CHECK(periphery == doctest::Approx(grid_max).epsilon(1e-9));
        CHECK(periphery == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("entanglement report") {
    const BipartiteState phi = bell_basis_state(1.0, 0.0, 0.0, 0.0);
    const EntanglementReport r = entanglement_report(phi);
    REQUIRE(r.concurrence.has_value());
    CHECK(*r.concurrence == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(*r.eof == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.beta == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.negativity == doctest::Approx(0.5).epsilon(1e-10));

    Rng rng(43);
    const EntanglementReport r2 =
        entanglement_report(testsupport::random_bipartite(rng, Spin(1), Spin(2)));
    CHECK(!r2.concurrence.has_value());
    CHECK(!r2.eof.has_value());
}
