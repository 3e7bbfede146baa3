#include "bellkit/operator_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bellkit {

OperatorMatrix::OperatorMatrix(int dim) : dim_(dim) {
    if (dim <= 0) throw std::domain_error("OperatorMatrix: dimension must be positive");
    a_.assign(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0));
}

OperatorMatrix::OperatorMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (dim <= 0) throw std::domain_error("OperatorMatrix: dimension must be positive");
    if (a_.size() != static_cast<size_t>(dim) * dim)
        throw std::domain_error("OperatorMatrix: entry count does not match dim*dim");
    if (!is_finite()) throw std::domain_error("OperatorMatrix: non-finite entry");
}

OperatorMatrix::OperatorMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(static_cast<int>(rows.size())) {
    if (dim_ <= 0) throw std::domain_error("OperatorMatrix: dimension must be positive");
    a_.reserve(static_cast<size_t>(dim_) * dim_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_)
            throw std::domain_error("OperatorMatrix: ragged initializer");
        a_.insert(a_.end(), row.begin(), row.end());
    }
    if (!is_finite()) throw std::domain_error("OperatorMatrix: non-finite entry");
}

OperatorMatrix OperatorMatrix::identity(int dim) {
    OperatorMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

OperatorMatrix OperatorMatrix::diagonal(const std::vector<Complex>& d) {
    OperatorMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
    if (o.dim_ != dim_) throw std::domain_error("OperatorMatrix: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
    if (o.dim_ != dim_) throw std::domain_error("OperatorMatrix: dimension mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex s) {
    for (auto& x : a_) x *= s;
    return *this;
}

OperatorMatrix OperatorMatrix::dagger() const {
    OperatorMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

OperatorMatrix OperatorMatrix::transpose() const {
    OperatorMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

OperatorMatrix OperatorMatrix::conj() const {
    OperatorMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(r, c));
    return m;
}

Complex OperatorMatrix::trace() const {
    Complex t(0.0, 0.0);
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double OperatorMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

bool OperatorMatrix::is_hermitian(double tol) const {
    for (int r = 0; r < dim_; ++r)
        for (int c = r; c < dim_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    return true;
}

bool OperatorMatrix::is_finite() const {
    for (const auto& x : a_)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw std::domain_error("OperatorMatrix: dimension mismatch");
    const int n = a.dim();
    OperatorMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const Complex arow = a(r, k);
            if (arow == Complex(0.0, 0.0)) continue;
            for (int c = 0; c < n; ++c) m(r, c) += arow * b(k, c);
        }
    return m;
}

OperatorMatrix operator*(Complex s, OperatorMatrix a) { return a *= s; }
OperatorMatrix operator*(OperatorMatrix a, Complex s) { return a *= s; }

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    OperatorMatrix m(na * nb);
    for (int ra = 0; ra < na; ++ra)
        for (int ca = 0; ca < na; ++ca) {
            const Complex v = a(ra, ca);
            if (v == Complex(0.0, 0.0)) continue;
            for (int rb = 0; rb < nb; ++rb)
                for (int cb = 0; cb < nb; ++cb)
                    m(ra * nb + rb, ca * nb + cb) = v * b(rb, cb);
        }
    return m;
}

OperatorMatrix matrix_power(const OperatorMatrix& a, int n) {
    if (n < 0) throw std::domain_error("matrix_power: negative exponent");
    OperatorMatrix m = OperatorMatrix::identity(a.dim());
    for (int i = 0; i < n; ++i) m = m * a;
    return m;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.dim() != b.dim()) throw std::domain_error("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

}  // namespace bellkit
