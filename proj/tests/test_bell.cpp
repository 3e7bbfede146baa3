#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bellkit/bell.hpp"
#include "bellkit/dynamics.hpp"
#include "test_support.hpp"

using namespace bellkit;
using testsupport::Rng;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

DichotomicObservable random_dichotomic(Rng& rng, int dim) {
    // unitary conjugation of a +-1 diagonal seed with both signs present
    std::vector<Complex> d(dim);
    for (int i = 0; i < dim; ++i) d[i] = (i % 2 == 0) ? 1.0 : -1.0;
    const OperatorMatrix u = testsupport::random_unitary(rng, dim);
    return DichotomicObservable(u * OperatorMatrix::diagonal(d) * u.dagger());
}

}  // namespace

TEST_CASE("dichotomic observable validation") {
    CHECK_NOTHROW(DichotomicObservable(pauli_z()));
    CHECK_THROWS_AS(DichotomicObservable(0.5 * pauli_z()), std::domain_error);
    OperatorMatrix nonherm(2);
    nonherm(0, 1) = 1.0;
    CHECK_THROWS_AS(DichotomicObservable{nonherm}, std::domain_error);
}

TEST_CASE("correlation") {
    const BipartiteState phi = bell_basis_state(1.0, 0.0, 0.0, 0.0);
    const DichotomicObservable z(pauli_z()), x(pauli_x());

    CHECK(correlation(phi, z, z) == doctest::Approx(1.0).epsilon(1e-12));

    // maximally mixed: traceless observables have zero correlation
    const BipartiteState mixed(Spin(1), Spin(1), 0.25 * OperatorMatrix::identity(4));
    CHECK(std::abs(correlation(mixed, z, x)) < 1e-14);

    const DichotomicObservable diag((1.0 / kSqrt2) * (pauli_x() + pauli_z()));
    CHECK(correlation(phi, z, diag) == doctest::Approx(1.0 / kSqrt2).epsilon(1e-12));

    // dimension mismatch
    Rng rng(1);
    const BipartiteState qq = testsupport::random_bipartite(rng, Spin(1), Spin(2));
    CHECK_THROWS_AS(correlation(qq, z, x), std::domain_error);
}

TEST_CASE("bell parameter on the Bell-basis family") {
    const ObservableTuple obs = standard_two_qubit_observables();

    SUBCASE("|4 sqrt2 alpha gamma| over an 81-point grid") {
        for (int ia = 0; ia <= 8; ++ia)
            for (int ig = 0; ig <= 8; ++ig) {
                const double a = -1.0 + 0.25 * ia, g = -1.0 + 0.25 * ig;
                const double rest = 1.0 - a * a - g * g;
                if (rest < 0.0) continue;
                const double bd = std::sqrt(rest / 2.0);
                const BipartiteState st = bell_basis_state(a, bd, g, bd);
                CHECK(bell_parameter(st, obs) ==
                      doctest::Approx(std::abs(4.0 * kSqrt2 * a * g)).epsilon(1e-10));
            }
    }
    SUBCASE("maximal violation at |alpha gamma| = 1/2") {
        const double s2 = 1.0 / kSqrt2;
        CHECK(bell_parameter(bell_basis_state(s2, 0.0, s2, 0.0), obs) ==
              doctest::Approx(2.0 * kSqrt2).epsilon(1e-12));
        CHECK(bell_parameter(bell_basis_state(s2, 0.0, -s2, 0.0), obs) ==
              doctest::Approx(2.0 * kSqrt2).epsilon(1e-12));
    }
    SUBCASE("product pure states stay below the local bound") {
        Rng rng(9);
        for (int trial = 0; trial < 40; ++trial) {
            // |a> x |b> with random qubit directions
            const Complex a0 = rng.cnormal(), a1 = rng.cnormal();
            const Complex b0 = rng.cnormal(), b1 = rng.cnormal();
            const Complex amps[4] = {a0 * b0, a0 * b1, a1 * b0, a1 * b1};
            const BipartiteState st = pure_bipartite(Spin(1), Spin(1), amps);
            CHECK(bell_parameter(st, obs) <= 2.0 + 1e-9);
        }
    }
    SUBCASE("basis rotation: F_B = |4 sqrt2 u v| with u, v the rotated axes") {
        // Rotating the Bell-coefficient vector once more through the
        // computational->Bell map gives a state whose Bell factor is
        // |4 sqrt2 u v| with u = (alpha+beta)/sqrt2, v = (gamma-delta)/sqrt2.
        Rng rng(15);
        const double s2 = 1.0 / kSqrt2;
        for (int trial = 0; trial < 25; ++trial) {
            double c[4];
            double n = 0.0;
            for (double& x : c) {
                x = rng.normal();
                n += x * x;
            }
            for (double& x : c) x /= std::sqrt(n);
            // computational amplitudes of the original state
            const Complex comp[4] = {(c[0] + c[1]) * s2, (c[2] + c[3]) * s2,
                                     (c[3] - c[2]) * s2, (c[0] - c[1]) * s2};
            // reinterpret them as Bell coefficients
            const BipartiteState rotated =
                bell_basis_state(comp[0], comp[1], comp[2], comp[3]);
            const double u = (c[0] + c[1]) * s2;
            const double v = (c[2] - c[3]) * s2;
            CHECK(bell_parameter(rotated, obs) ==
                  doctest::Approx(std::abs(4.0 * kSqrt2 * u * v)).epsilon(1e-10));
        }
    }
}

TEST_CASE("x-state observables and closed form") {
    const ObservableTuple obs = xstate_observables();
    CHECK(max_abs_diff(obs.a1.mat(), pauli_y()) == 0.0);
    CHECK(max_abs_diff(obs.a2.mat(), pauli_x()) == 0.0);

    SUBCASE("closed form equals the Bell evaluation on 100 random X-states") {
        Rng rng(21);
        for (int trial = 0; trial < 100; ++trial) {
            const BipartiteState st = testsupport::random_x_state(rng);
            CHECK(xstate_bell_closed_form(st) ==
                  doctest::Approx(bell_parameter(st, obs)).epsilon(1e-10));
        }
    }
    SUBCASE("r14 = 1/2 with phase pi/2 gives sqrt2") {
        OperatorMatrix m(4);
        m(0, 0) = 0.5;
        m(3, 3) = 0.5;
        m(3, 0) = Complex(0.0, 0.5);
        m(0, 3) = Complex(0.0, -0.5);
        const BipartiteState st(Spin(1), Spin(1), m);
        CHECK(xstate_bell_closed_form(st) == doctest::Approx(kSqrt2).epsilon(1e-12));
        CHECK(bell_parameter(st, obs) == doctest::Approx(kSqrt2).epsilon(1e-12));
    }
    SUBCASE("real X-state (all phases zero) gives zero") {
        OperatorMatrix m(4);
        m(0, 0) = 0.5;
        m(3, 3) = 0.5;
        m(3, 0) = 0.4;
        m(0, 3) = 0.4;
        CHECK(xstate_bell_closed_form(BipartiteState(Spin(1), Spin(1), m)) < 1e-14);
    }
    SUBCASE("non-X input rejected") {
        Rng rng(25);
        const BipartiteState st = testsupport::random_bipartite(rng, Spin(1), Spin(1));
        CHECK_THROWS_AS(xstate_bell_closed_form(st), std::domain_error);
    }
}

TEST_CASE("Cirel'son bound over randomized trials") {
    Rng rng(33);
    const double bound = 2.0 * kSqrt2 + 1e-9;
    for (int trial = 0; trial < 500; ++trial) {
        const BipartiteState st = testsupport::random_bipartite(rng, Spin(1), Spin(1));
        const ObservableTuple obs{random_dichotomic(rng, 2), random_dichotomic(rng, 2),
                                  random_dichotomic(rng, 2), random_dichotomic(rng, 2)};
        CHECK(bell_parameter(st, obs) <= bound);
    }
    for (int trial = 0; trial < 500; ++trial) {
        const BipartiteState st = testsupport::random_bipartite(rng, Spin(1), Spin(2));
        const ObservableTuple obs{random_dichotomic(rng, 2), random_dichotomic(rng, 2),
                                  random_dichotomic(rng, 3), random_dichotomic(rng, 3)};
        CHECK(bell_parameter(st, obs) <= bound);
    }
}

TEST_CASE("product states never beat the local bound, 200 random tuples") {
    Rng rng(35);
    for (int trial = 0; trial < 200; ++trial) {
        const DensityMatrix a = testsupport::random_density(rng, Spin(1));
        const DensityMatrix b = testsupport::random_density(rng, Spin(1));
        const BipartiteState st = compose_product(a, b);
        const ObservableTuple obs{random_dichotomic(rng, 2), random_dichotomic(rng, 2),
                                  random_dichotomic(rng, 2), random_dichotomic(rng, 2)};
        CHECK(bell_parameter(st, obs) <= 2.0 + 1e-9);
    }
}

TEST_CASE("horodecki analytic maximum") {
    SUBCASE("Bell state reaches 2 sqrt2") {
        CHECK(horodecki_max_bell(bell_basis_state(1.0, 0.0, 0.0, 0.0)) ==
              doctest::Approx(2.0 * kSqrt2).epsilon(1e-12));
    }
    SUBCASE("product state stays below 2") {
        Rng rng(45);
        const DensityMatrix a = testsupport::random_density(rng, Spin(1));
        const DensityMatrix b = testsupport::random_density(rng, Spin(1));
        CHECK(horodecki_max_bell(compose_product(a, b)) <= 2.0 + 1e-9);
    }
    SUBCASE("Werner states scale as 2 sqrt2 p") {
        const BipartiteState phi = bell_basis_state(1.0, 0.0, 0.0, 0.0);
        for (double p : {0.1, 0.35, 0.5, 0.8, 1.0}) {
            OperatorMatrix m = Complex(p, 0.0) * phi.mat() +
                               Complex((1.0 - p) / 4.0, 0.0) * OperatorMatrix::identity(4);
            CHECK(horodecki_max_bell(BipartiteState(Spin(1), Spin(1), std::move(m))) ==
                  doctest::Approx(2.0 * kSqrt2 * p).epsilon(1e-12));
        }
    }
}

TEST_CASE("family A construction") {
    const ObservableFamily fam = qubit_qutrit_family_a();
    CHECK(fam.arity() == 7);

    SUBCASE("B1 is exactly diag(1,1,-1)") {
        const std::vector<double> zero(7, 0.0);
        const ObservableTuple obs = fam.build(zero);
        CHECK(max_abs_diff(obs.b1.mat(), OperatorMatrix::diagonal({1.0, 1.0, -1.0})) == 0.0);
    }
    SUBCASE("all parameters zero gives A1 = A2 = sz and B2 = B1") {
        const std::vector<double> zero(7, 0.0);
        const ObservableTuple obs = fam.build(zero);
        CHECK(max_abs_diff(obs.a1.mat(), pauli_z()) < 1e-14);
        CHECK(max_abs_diff(obs.a2.mat(), pauli_z()) < 1e-14);
        CHECK(max_abs_diff(obs.b2.mat(), obs.b1.mat()) < 1e-14);
    }
    SUBCASE("outputs dichotomic for random parameters, both u2 readings") {
        Rng rng(51);
        for (U2Variant v : {U2Variant::sigma1x, U2Variant::sigma1y}) {
            const ObservableFamily f = qubit_qutrit_family_a(v);
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<double> p(7);
                for (double& x : p) x = rng.uniform() * 2.0 * kPi;
                CHECK_NOTHROW(f.build(p));  // DichotomicObservable validates A^2 = I
            }
        }
    }
    SUBCASE("arity mismatch rejected") {
        const std::vector<double> bad(6, 0.0);
        CHECK_THROWS_AS(fam.build(bad), std::domain_error);
    }
}

TEST_CASE("family B construction") {
    const ObservableFamily fam = qubit_qutrit_family_b();
    CHECK(fam.arity() == 8);

    SUBCASE("alpha = 0 gives A1 = sz") {
        std::vector<double> p(8, 0.0);
        const ObservableTuple obs = fam.build(p);
        CHECK(max_abs_diff(obs.a1.mat(), pauli_z()) == 0.0);
        CHECK(max_abs_diff(obs.b1.mat(), OperatorMatrix::diagonal({1.0, -1.0, -1.0})) == 0.0);
        CHECK(max_abs_diff(obs.b2.mat(), OperatorMatrix::diagonal({-1.0, 1.0, 1.0})) < 1e-14);
    }
    SUBCASE("alpha = pi/4 gives a reflection with determinant -1") {
        std::vector<double> p(8, 0.0);
        p[0] = kPi / 4.0;
        const ObservableTuple obs = fam.build(p);
        const OperatorMatrix& a1 = obs.a1.mat();
        const Complex det = a1(0, 0) * a1(1, 1) - a1(0, 1) * a1(1, 0);
        CHECK(std::abs(det - Complex(-1.0, 0.0)) < 1e-14);
    }
    SUBCASE("dichotomic for random parameters, both orderings") {
        Rng rng(53);
        for (Su3Order o : {Su3Order::blockwise, Su3Order::interleaved}) {
            const ObservableFamily f = qubit_qutrit_family_b(o);
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<double> p(8);
                for (double& x : p) x = rng.uniform() * 2.0 * kPi;
                CHECK_NOTHROW(f.build(p));
            }
        }
    }
    SUBCASE("p1 preset attains the near-Cirel'son deficit") {
        // p1 = 1, theta1 = 3pi/4: the tau = 0 point carries the maximum
        const ObservableTuple obs = fam.build(family_b_p1_params());
        const double f = bell_parameter(xstate_p1(3.0 * kPi / 4.0, 0.0), obs);
        CHECK(f == doctest::Approx(2.827869391331).epsilon(1e-9));
        CHECK(2.0 * kSqrt2 - f == doctest::Approx(5.58e-4).epsilon(2e-3));
    }
}

TEST_CASE("qubit rotation family covers the Horodecki bound on the Bell state") {
    const ObservableFamily fam = qubit_rotation_family();
    CHECK(fam.arity() == 8);
    // optimal settings under the minus-on-(A2,B1) sign pattern:
    // A1=z, A2=x, B1=(z-x)/sqrt2, B2=(z+x)/sqrt2
    const std::vector<double> p = {0.0, 0.0, kPi / 2.0, 0.0, kPi / 4.0, kPi,
                                   kPi / 4.0, 0.0};
    const double f = bell_parameter(bell_basis_state(1.0, 0.0, 0.0, 0.0), fam.build(p));
    CHECK(f == doctest::Approx(2.0 * kSqrt2).epsilon(1e-10));
}
