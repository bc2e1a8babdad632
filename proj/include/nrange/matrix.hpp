// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_MATRIX_HPP
#define NRANGE_MATRIX_HPP

#include <complex>
#include <vector>

#include "nrange/rational.hpp"

namespace nrange {

// Dense square matrix with exact complex-rational entries.
class ExactComplexMatrix {
  public:
    ExactComplexMatrix() = default;
    explicit ExactComplexMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static ExactComplexMatrix identity(int n) {
        ExactComplexMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
        return m;
    }

    int n() const { return n_; }
    GaussianRational& operator()(int r, int c) { return a_[idx(r, c)]; }
    const GaussianRational& operator()(int r, int c) const { return a_[idx(r, c)]; }

    ExactComplexMatrix adjoint() const {
        ExactComplexMatrix m(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) m(c, r) = (*this)(r, c).conj();
        return m;
    }

    bool is_zero() const {
        for (const auto& z : a_)
            if (!z.is_zero()) return false;
        return true;
    }
    bool is_hermitian() const { return *this == adjoint(); }

    friend ExactComplexMatrix operator+(const ExactComplexMatrix& a, const ExactComplexMatrix& b);
    friend ExactComplexMatrix operator-(const ExactComplexMatrix& a, const ExactComplexMatrix& b);
    friend ExactComplexMatrix operator*(const ExactComplexMatrix& a, const ExactComplexMatrix& b);
    friend ExactComplexMatrix operator*(const GaussianRational& c, const ExactComplexMatrix& a);
    friend bool operator==(const ExactComplexMatrix& a, const ExactComplexMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

  private:
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * n_ + c; }
    int n_ = 0;
    std::vector<GaussianRational> a_;
};

// Exact determinant by Gaussian elimination with first-nonzero pivoting.
GaussianRational det_exact_gauss(ExactComplexMatrix m);

// Exact inverse via Gauss-Jordan; throws std::invalid_argument when singular.
ExactComplexMatrix inverse_exact(const ExactComplexMatrix& m);

// Exact positive-semidefiniteness of a Hermitian matrix by pivoted Schur
// elimination: a zero diagonal forces a zero row, a negative pivot refutes.
bool psd_exact(const ExactComplexMatrix& m);

// Dense square complex matrix in double precision.
class ComplexMatrixF {
  public:
    using C = std::complex<double>;

    ComplexMatrixF() = default;
    explicit ComplexMatrixF(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static ComplexMatrixF identity(int n) {
        ComplexMatrixF m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static ComplexMatrixF from_exact(const ExactComplexMatrix& e) {
        ComplexMatrixF m(e.n());
        for (int r = 0; r < e.n(); ++r)
            for (int c = 0; c < e.n(); ++c) m(r, c) = e(r, c).to_complex();
        return m;
    }

    int n() const { return n_; }
    C& operator()(int r, int c) { return a_[idx(r, c)]; }
    const C& operator()(int r, int c) const { return a_[idx(r, c)]; }

    ComplexMatrixF adjoint() const {
        ComplexMatrixF m(n_);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    double frobenius() const;
    double max_abs() const;
    // max entry of |M - M*|, absolute.
    double hermitian_defect() const;

    friend ComplexMatrixF operator+(const ComplexMatrixF& a, const ComplexMatrixF& b);
    friend ComplexMatrixF operator-(const ComplexMatrixF& a, const ComplexMatrixF& b);
    friend ComplexMatrixF operator*(const ComplexMatrixF& a, const ComplexMatrixF& b);
    friend ComplexMatrixF operator*(double c, const ComplexMatrixF& a);

  private:
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * n_ + c; }
    int n_ = 0;
    std::vector<C> a_;
};

}  // namespace nrange

#endif
