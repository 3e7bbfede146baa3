#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace bellkit {

using Complex = std::complex<double>;

// Dense complex square matrix, row-major. Carrier for every operator in the
// toolkit: ladder powers, projectors, Gell-Mann generators, observables and
// density matrices.
class OperatorMatrix {
public:
    explicit OperatorMatrix(int dim);
    OperatorMatrix(int dim, std::vector<Complex> entries);  // rejects non-square / non-finite
    OperatorMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static OperatorMatrix identity(int dim);
    static OperatorMatrix diagonal(const std::vector<Complex>& d);

    int dim() const { return dim_; }
    Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const std::vector<Complex>& entries() const { return a_; }

    OperatorMatrix& operator+=(const OperatorMatrix& o);
    OperatorMatrix& operator-=(const OperatorMatrix& o);
    OperatorMatrix& operator*=(Complex s);

    OperatorMatrix dagger() const;
    OperatorMatrix transpose() const;
    OperatorMatrix conj() const;
    Complex trace() const;

    double max_abs() const;                 // elementwise infinity norm
    bool is_hermitian(double tol) const;
    bool is_finite() const;

private:
    int dim_;
    std::vector<Complex> a_;
};

OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b);
OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b);
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(Complex s, OperatorMatrix a);
OperatorMatrix operator*(OperatorMatrix a, Complex s);

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix matrix_power(const OperatorMatrix& a, int n);

// max_kl |a_kl - b_kl|
double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

}  // namespace bellkit
