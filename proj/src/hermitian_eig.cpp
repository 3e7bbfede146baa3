#include "bellkit/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bellkit {

namespace {

double offdiag_norm(const OperatorMatrix& a) {
    double s = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = r + 1; c < a.dim(); ++c) s += std::norm(a(r, c));
    return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem eigh(const OperatorMatrix& input) {
    if (!input.is_hermitian(1e-9)) throw std::domain_error("eigh: matrix not Hermitian");

    const int n = input.dim();
    OperatorMatrix a = input;
    // Symmetrize exactly so rounding asymmetry cannot bias the sweeps.
    for (int r = 0; r < n; ++r) {
        a(r, r) = Complex(a(r, r).real(), 0.0);
        for (int c = r + 1; c < n; ++c) {
            const Complex m = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = m;
            a(c, r) = std::conj(m);
        }
    }
    OperatorMatrix v = OperatorMatrix::identity(n);

    const double scale = std::max(a.max_abs(), 1e-300);
    const double stop = 1e-15 * scale * n;
    const int max_sweeps = 100;

    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > stop; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double b = std::abs(apq);
                if (b <= 1e-300) continue;
                const Complex phase = apq / b;  // e^{i phi}

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * b);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Plane rotation R: R[p][p]=c, R[p][q]=s*phase,
                // R[q][p]=-s*conj(phase), R[q][q]=c; update A <- R^dag A R.
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                a(p, q) = Complex(0.0, 0.0);
                a(q, p) = Complex(0.0, 0.0);
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);

                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem out{std::vector<double>(static_cast<size_t>(n)), OperatorMatrix(n)};
    for (int c = 0; c < n; ++c) {
        out.values[static_cast<size_t>(c)] = a(order[static_cast<size_t>(c)], order[static_cast<size_t>(c)]).real();
        for (int r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[static_cast<size_t>(c)]);
    }
    return out;
}

OperatorMatrix expm_i_hermitian(const OperatorMatrix& h) {
    const EigenSystem es = eigh(h);
    const int n = h.dim();
    OperatorMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < n; ++k) {
                const Complex ph(std::cos(es.values[static_cast<size_t>(k)]),
                                 std::sin(es.values[static_cast<size_t>(k)]));
                s += es.vectors(r, k) * ph * std::conj(es.vectors(c, k));
            }
            out(r, c) = s;
        }
    return out;
}

OperatorMatrix sqrt_psd(const OperatorMatrix& a) {
    const EigenSystem es = eigh(a);
    const int n = a.dim();
    OperatorMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < n; ++k) {
                const double w = std::sqrt(std::max(es.values[static_cast<size_t>(k)], 0.0));
                s += es.vectors(r, k) * w * std::conj(es.vectors(c, k));
            }
            out(r, c) = s;
        }
    return out;
}

}  // namespace bellkit
