// SPDX-License-Identifier: Apache-2.0
#include "nrange/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace nrange {

ExactComplexMatrix operator+(const ExactComplexMatrix& a, const ExactComplexMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    ExactComplexMatrix r(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
}

ExactComplexMatrix operator-(const ExactComplexMatrix& a, const ExactComplexMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    ExactComplexMatrix r(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
}

ExactComplexMatrix operator*(const ExactComplexMatrix& a, const ExactComplexMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    const int n = a.n_;
    ExactComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const GaussianRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

ExactComplexMatrix operator*(const GaussianRational& c, const ExactComplexMatrix& a) {
    ExactComplexMatrix r(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = c * a.a_[k];
    return r;
}

GaussianRational det_exact_gauss(ExactComplexMatrix m) {
    const int n = m.n();
    GaussianRational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return GaussianRational(0);
        if (pivot != col) {
            for (int c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const GaussianRational f = m(r, col) / m(col, col);
            for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

ExactComplexMatrix inverse_exact(const ExactComplexMatrix& m) {
    const int n = m.n();
    ExactComplexMatrix a = m;
    ExactComplexMatrix inv = ExactComplexMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("inverse of singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        const GaussianRational p = a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) = a(col, c) / p;
            inv(col, c) = inv(col, c) / p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const GaussianRational f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

bool psd_exact(const ExactComplexMatrix& m) {
    if (!m.is_hermitian()) throw std::invalid_argument("psd_exact requires a Hermitian matrix");
    const int n = m.n();
    ExactComplexMatrix a = m;
    std::vector<int> live(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) live[static_cast<std::size_t>(i)] = i;
    while (!live.empty()) {
        int pivot = -1;
        for (std::size_t k = 0; k < live.size(); ++k) {
            const auto& d = a(live[k], live[k]);
            if (sign(d.re) < 0) return false;
            if (sign(d.re) > 0 && pivot < 0) pivot = static_cast<int>(k);
        }
        if (pivot < 0) {
            // All remaining diagonal entries are zero: PSD iff the block is zero.
            for (int r : live)
                for (int c : live)
                    if (!a(r, c).is_zero()) return false;
            return true;
        }
        const int p = live[static_cast<std::size_t>(pivot)];
        const GaussianRational d = a(p, p);
        live.erase(live.begin() + pivot);
        for (int r : live)
            for (int c : live) a(r, c) -= a(r, p) * a(p, c) / d;
    }
    return true;
}

double ComplexMatrixF::frobenius() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrixF::max_abs() const {
    double s = 0.0;
    for (const auto& z : a_) s = std::max(s, std::abs(z));
    return s;
}

double ComplexMatrixF::hermitian_defect() const {
    double s = 0.0;
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) s = std::max(s, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return s;
}

ComplexMatrixF operator+(const ComplexMatrixF& a, const ComplexMatrixF& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    ComplexMatrixF r(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
}

ComplexMatrixF operator-(const ComplexMatrixF& a, const ComplexMatrixF& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    ComplexMatrixF r(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
}

ComplexMatrixF operator*(const ComplexMatrixF& a, const ComplexMatrixF& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
    const int n = a.n_;
    ComplexMatrixF r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::complex<double> aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

ComplexMatrixF operator*(double c, const ComplexMatrixF& a) {
    ComplexMatrixF r(a.n_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = c * a.a_[k];
    return r;
}

}  // namespace nrange
