#include "bellkit/angmom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bellkit/detail/math_util.hpp"

namespace bellkit {

namespace {

using detail::ln_factorial;

double cplus(double j, double m) { return std::sqrt(j * (j + 1.0) - m * (m + 1.0)); }

// Plain (unnormalized) ladder power J_pm^r, scaled by exp(ln_scale). The
// scale is folded in per factor by callers that chain several large powers,
// keeping intermediates inside double range for 2j up to 60.
OperatorMatrix scaled_plain_power(Spin j, Ladder dir, int r, double ln_scale) {
    OperatorMatrix base = (dir == Ladder::plus) ? jplus(j) : jminus(j);
    OperatorMatrix m = matrix_power(base, r);
    return m * Complex(std::exp(ln_scale), 0.0);
}

}  // namespace

OperatorMatrix jz(Spin j) {
    OperatorMatrix m(j.dim());
    for (int k = 1; k <= j.dim(); ++k) m(k - 1, k - 1) = j.m_of(k);
    return m;
}

OperatorMatrix jplus(Spin j) {
    OperatorMatrix m(j.dim());
    // J+|k> = cplus(m_k)|k-1>: superdiagonal in the |k> = |j, j-k+1> ordering.
    for (int k = 2; k <= j.dim(); ++k) m(k - 2, k - 1) = cplus(j.j(), j.m_of(k));
    return m;
}

OperatorMatrix jminus(Spin j) { return jplus(j).dagger(); }

OperatorMatrix jx(Spin j) { return 0.5 * (jplus(j) + jminus(j)); }

OperatorMatrix jy(Spin j) { return Complex(0.0, -0.5) * (jplus(j) - jminus(j)); }

OperatorMatrix normalized_ladder_power(Spin j, Ladder direction, int r) {
    const int twoj = j.twice_j();
    if (r < 0 || r > twoj)
        throw std::domain_error("normalized_ladder_power: r outside [0, 2j]");
    if (r == 0) return OperatorMatrix::identity(j.dim());
    const double ln_pre =
        0.5 * (ln_factorial(twoj - r) - ln_factorial(r) - ln_factorial(twoj));
    return scaled_plain_power(j, direction, r, ln_pre);
}

OperatorMatrix projector(Spin j, int k, int l) {
    const int d = j.dim();
    if (k < 1 || k > d || l < 1 || l > d)
        throw std::domain_error("projector: index outside [1, d]");
    const int twoj = j.twice_j();
    return normalized_ladder_power(j, Ladder::plus, twoj - k + 1) *
           normalized_ladder_power(j, Ladder::minus, twoj) *
           normalized_ladder_power(j, Ladder::plus, l - 1);
}

OperatorMatrix projector_alt_minus_plus(Spin j, int k, int l) {
    const int d = j.dim();
    if (k < 1 || k > d || l < 1 || l > d)
        throw std::domain_error("projector_alt_minus_plus: index outside [1, d]");
    const int twoj = j.twice_j();
    const double ln_pre = 0.5 * (ln_factorial(twoj - k + 1) + ln_factorial(l - 1) -
                                 ln_factorial(twoj - l + 1) - ln_factorial(k - 1)) -
                          2.0 * ln_factorial(twoj);
    // Spread the prefactor over the three factors so each stays in range.
    const double per = ln_pre / 3.0;
    return scaled_plain_power(j, Ladder::minus, k - 1, per) *
           scaled_plain_power(j, Ladder::plus, twoj, per) *
           scaled_plain_power(j, Ladder::minus, twoj - l + 1, per);
}

OperatorMatrix projector_alt_plus_minus(Spin j, int k, int l) {
    const int d = j.dim();
    if (k < 1 || k > d || l < 1 || l > d)
        throw std::domain_error("projector_alt_plus_minus: index outside [1, d]");
    const int twoj = j.twice_j();
    const double ln_pre = 0.5 * (ln_factorial(k - 1) + ln_factorial(l - 1) -
                                 ln_factorial(twoj - k + 1) - ln_factorial(twoj - l + 1)) -
                          3.0 * ln_factorial(twoj);
    const double per = ln_pre / 4.0;
    return scaled_plain_power(j, Ladder::plus, twoj - k + 1, per) *
           scaled_plain_power(j, Ladder::minus, twoj, per) *
           scaled_plain_power(j, Ladder::plus, twoj, per) *
           scaled_plain_power(j, Ladder::minus, twoj - l + 1, per);
}

OperatorMatrix functional_f(Spin j, int k) {
    if (k < 0) throw std::domain_error("functional_f: k must be non-negative");
    OperatorMatrix m(j.dim());
    const double jj = j.j() * (j.j() + 1.0);
    for (int row = 1; row <= j.dim(); ++row) {
        const double x = j.m_of(row) - k;  // eigenvalue of J_z - kI
        m(row - 1, row - 1) = jj - x * x + x;
    }
    return m;
}

OperatorMatrix functional_g(Spin j, int k) {
    if (k < 0) throw std::domain_error("functional_g: k must be non-negative");
    OperatorMatrix m(j.dim());
    const double jj = j.j() * (j.j() + 1.0);
    for (int row = 1; row <= j.dim(); ++row) {
        const double x = j.m_of(row) + k;  // eigenvalue of J_z + kI
        m(row - 1, row - 1) = jj - x * x - x;
    }
    return m;
}

OperatorMatrix ladder_product(Spin j, Ladder left_dir, int left_pow, int right_pow) {
    if (left_pow < 0 || right_pow < 0)
        throw std::domain_error("ladder_product: powers must be non-negative");
    const int k = left_pow;
    const int m = right_pow;
    const Ladder right_dir = (left_dir == Ladder::plus) ? Ladder::minus : Ladder::plus;

    auto functional = [&](int idx) {
        return (left_dir == Ladder::plus) ? functional_f(j, idx) : functional_g(j, idx);
    };

    OperatorMatrix prod = OperatorMatrix::identity(j.dim());
    const int nfun = std::min(k, m);
    for (int s = 1; s <= nfun; ++s) prod = prod * functional(k - s);

    if (m >= k) {
        // J_left^k J_right^m = (prod_{s=1..k} F/G_{k-s}) J_right^{m-k}
        return prod * scaled_plain_power(j, right_dir, m - k, 0.0);
    }
    // m < k: the leftover power keeps the left direction.
    return prod * scaled_plain_power(j, left_dir, k - m, 0.0);
}

GellMannBasis gell_mann(int d) {
    if (d < 2) throw std::domain_error("gell_mann: d must be at least 2");
    const Spin j(d - 1);
    GellMannBasis basis{d, {}};
    basis.generators.reserve(static_cast<size_t>(d) * d - 1);

    // Symmetric block, pairs (k,l) with k<l in lexicographic order.
    for (int k = 1; k <= d; ++k)
        for (int l = k + 1; l <= d; ++l)
            basis.generators.push_back(projector(j, k, l) + projector(j, l, k));

    // Antisymmetric block, same pair order.
    for (int k = 1; k <= d; ++k)
        for (int l = k + 1; l <= d; ++l)
            basis.generators.push_back(Complex(0.0, 1.0) *
                                       (projector(j, l, k) - projector(j, k, l)));

    // Diagonal block, r = 1..d-1.
    for (int r = 1; r <= d - 1; ++r) {
        OperatorMatrix sum(d);
        for (int k = 1; k <= r; ++k) sum += projector(j, k, k);
        sum -= Complex(static_cast<double>(r), 0.0) * projector(j, r + 1, r + 1);
        basis.generators.push_back(std::sqrt(2.0 / (r * (r + 1.0))) * sum);
    }
    return basis;
}

OperatorExpansion expand_operator(const OperatorMatrix& o, const GellMannBasis& basis) {
    if (o.dim() != basis.dim) throw std::domain_error("expand_operator: dimension mismatch");
    OperatorExpansion out{o.trace(), {}};
    out.coeffs.reserve(basis.generators.size());
    for (const auto& g : basis.generators) out.coeffs.push_back((o * g).trace());
    return out;
}

OperatorMatrix reconstruct_operator(Complex trace, std::span<const Complex> coeffs,
                                    const GellMannBasis& basis) {
    if (coeffs.size() != basis.generators.size())
        throw std::domain_error("reconstruct_operator: coefficient count mismatch");
    OperatorMatrix o = (trace / static_cast<double>(basis.dim)) *
                       OperatorMatrix::identity(basis.dim);
    for (size_t i = 0; i < coeffs.size(); ++i) o += 0.5 * coeffs[i] * basis.generators[i];
    return o;
}

}  // namespace bellkit
