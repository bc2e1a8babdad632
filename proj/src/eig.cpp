// SPDX-License-Identifier: Apache-2.0
#include "nrange/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nrange {

namespace {

double off_diag_sq(const ComplexMatrixF& a) {
    double s = 0.0;
    for (int r = 0; r < a.n(); ++r)
        for (int c = 0; c < a.n(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return s;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrixF& h) {
    using C = std::complex<double>;
    const int n = h.n();
    if (n == 0) throw std::invalid_argument("eigendecomposition of empty matrix");
    if (h.hermitian_defect() > 1e-12 * (1.0 + h.max_abs()))
        throw std::invalid_argument("hermitian_eig: input is not numerically Hermitian");

    // Symmetrize away the sub-1e-12 defect so the iteration sees an exactly
    // Hermitian matrix.
    ComplexMatrixF a(n);
    for (int r = 0; r < n; ++r) {
        a(r, r) = C(0.5 * (h(r, r) + std::conj(h(r, r))).real(), 0.0);
        for (int c = r + 1; c < n; ++c) {
            const C v = 0.5 * (h(r, c) + std::conj(h(c, r)));
            a(r, c) = v;
            a(c, r) = std::conj(v);
        }
    }

    ComplexMatrixF v = ComplexMatrixF::identity(n);
    const double fro2 = [&] {
        double s = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) s += std::norm(a(r, c));
        return s;
    }();
    const double stop = 1e-28 * fro2;

    int sweep = 0;
    while (n > 1 && off_diag_sq(a) > stop) {
        if (++sweep > 60) throw NumericError("hermitian_eig: no convergence after 60 sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const C hpq = a(p, q);
                const double g = std::abs(hpq);
                if (g == 0.0) continue;
                const C u = hpq / g;  // phase
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double tau = (beta - alpha) / (2.0 * g);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::hypot(1.0, tau))
                                              : 1.0 / (tau - std::hypot(1.0, tau));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;
                const C su = s * u;
                const C suc = s * std::conj(u);
                // Right-multiply columns p,q by [[c, s],[-s conj(u), c conj(u)]] ... A <- A V
                for (int k = 0; k < n; ++k) {
                    const C akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - suc * akq;
                    a(k, q) = s * akp + c * std::conj(u) * akq;
                }
                // Left-multiply rows p,q by V*.
                for (int k = 0; k < n; ++k) {
                    const C apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - su * aqk;
                    a(q, k) = s * apk + c * u * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = C(a(p, p).real(), 0.0);
                a(q, q) = C(a(q, q).real(), 0.0);
                for (int k = 0; k < n; ++k) {
                    const C vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - suc * vkq;
                    v(k, q) = s * vkp + c * std::conj(u) * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition d;
    d.eigenvalues.resize(static_cast<std::size_t>(n));
    d.vectors = ComplexMatrixF(n);
    for (int k = 0; k < n; ++k) {
        d.eigenvalues[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
        for (int r = 0; r < n; ++r) d.vectors(r, k) = v(r, order[static_cast<std::size_t>(k)]);
    }
    return d;
}

bool is_normal(const ExactComplexMatrix& a) {
    return a.adjoint() * a == a * a.adjoint();
}

std::vector<std::complex<double>> normal_spectrum(const ExactComplexMatrix& a) {
    using C = std::complex<double>;
    if (!is_normal(a)) throw std::invalid_argument("normal_spectrum: matrix is not normal");
    const int n = a.n();
    const ComplexMatrixF af = ComplexMatrixF::from_exact(a);
    ComplexMatrixF h1(n), h2(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const C z = af(r, c), w = std::conj(af(c, r));
            h1(r, c) = 0.5 * (z + w);
            h2(r, c) = C(0.0, -0.5) * (z - w);
        }
    const EigenDecomposition d1 = hermitian_eig(h1);
    const double group_tol = 1e-8 * (1.0 + h1.frobenius());

    std::vector<C> out;
    int k = 0;
    while (k < n) {
        int k2 = k + 1;
        while (k2 < n && d1.eigenvalues[static_cast<std::size_t>(k2)] - d1.eigenvalues[static_cast<std::size_t>(k)] <= group_tol) ++k2;
        const int blk = k2 - k;
        // Compress the skew part onto the eigenspace block and diagonalize.
        ComplexMatrixF b(blk);
        for (int i = 0; i < blk; ++i)
            for (int j = 0; j < blk; ++j) {
                C s = 0.0;
                for (int r = 0; r < n; ++r) {
                    C h2v = 0.0;
                    for (int c = 0; c < n; ++c) h2v += h2(r, c) * d1.vectors(c, k + j);
                    s += std::conj(d1.vectors(r, k + i)) * h2v;
                }
                b(i, j) = s;
            }
        const EigenDecomposition d2 = hermitian_eig(b);
        for (int j = 0; j < blk; ++j) {
            // a1 via the Rayleigh quotient of the combined vector.
            std::vector<C> w(static_cast<std::size_t>(n), 0.0);
            for (int r = 0; r < n; ++r)
                for (int i = 0; i < blk; ++i) w[static_cast<std::size_t>(r)] += d1.vectors(r, k + i) * d2.vectors(i, j);
            C a1 = 0.0;
            for (int r = 0; r < n; ++r) {
                C h1w = 0.0;
                for (int c = 0; c < n; ++c) h1w += h1(r, c) * w[static_cast<std::size_t>(c)];
                a1 += std::conj(w[static_cast<std::size_t>(r)]) * h1w;
            }
            out.emplace_back(a1.real(), d2.eigenvalues[static_cast<std::size_t>(j)]);
        }
        k = k2;
    }
    std::sort(out.begin(), out.end(), [](const C& x, const C& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    return out;
}

}  // namespace nrange
