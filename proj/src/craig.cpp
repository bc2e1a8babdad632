// SPDX-License-Identifier: Apache-2.0
#include "nrange/craig.hpp"

#include <cmath>
#include <map>

#include "nrange/pencil.hpp"

namespace nrange {

namespace {

void require_pair(const ExactComplexMatrix& a1, const ExactComplexMatrix& a2) {
    if (a1.n() != a2.n()) throw std::invalid_argument("craig: size mismatch");
    if (!a1.is_hermitian() || !a2.is_hermitian())
        throw std::invalid_argument("craig: inputs must be Hermitian");
}

// Coefficients of det(I + y B) as a univariate polynomial, exact.
std::vector<Rational> marginal_det(const ExactComplexMatrix& b) {
    const int n = b.n();
    HermitianPencil p;
    p.n = n;
    p.a1 = b;
    p.a2 = ExactComplexMatrix(n);
    const TrivariateForm f = pencil_form(p);  // det(y0 I + y1 B)
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (const auto& [m, coef] : f.terms()) {
        if (m.e2 != 0) throw NumericError("marginal determinant has spurious terms");
        c[static_cast<std::size_t>(m.e1)] = coef;
    }
    return c;
}

}  // namespace

bool product_zero(const ExactComplexMatrix& a1, const ExactComplexMatrix& a2) {
    require_pair(a1, a2);
    return (a1 * a2).is_zero();
}

bool factorization_identity(const ExactComplexMatrix& a1, const ExactComplexMatrix& a2) {
    require_pair(a1, a2);
    const int n = a1.n();
    HermitianPencil p;
    p.n = n;
    p.a1 = a1;
    p.a2 = a2;
    const TrivariateForm f = pencil_form(p);
    // Dehomogenize at y0 = 1: homogeneity makes (e1,e2) a unique key.
    std::map<std::pair<int, int>, Rational> joint;
    for (const auto& [m, c] : f.terms()) joint[{m.e1, m.e2}] = c;

    const std::vector<Rational> u1 = marginal_det(a1);
    const std::vector<Rational> u2 = marginal_det(a2);
    std::map<std::pair<int, int>, Rational> prod;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const Rational c = u1[static_cast<std::size_t>(i)] * u2[static_cast<std::size_t>(j)];
            if (c != 0) prod[{i, j}] = c;
        }
    return joint == prod;
}

CraigReport craig_check(const ExactComplexMatrix& a1, const ExactComplexMatrix& a2) {
    require_pair(a1, a2);
    CraigReport rep;
    rep.product_zero = product_zero(a1, a2);
    rep.factorization_holds = factorization_identity(a1, a2);
    rep.consistent = (rep.product_zero == rep.factorization_holds);
    if (rep.product_zero) {
        // A1 A2 = 0 forces commutation, so A1 + i A2 is normal and the
        // two-stage diagonalization yields the simultaneous pairs.
        const ExactComplexMatrix a = a1 + GaussianRational(rat(0), rat(1)) * a2;
        const auto spec = normal_spectrum(a);
        std::vector<std::pair<double, double>> pairs;
        for (const auto& z : spec) {
            pairs.emplace_back(z.real(), z.imag());
            rep.max_axis_product = std::max(rep.max_axis_product, std::abs(z.real() * z.imag()));
        }
        rep.joint_spectrum = std::move(pairs);
    }
    return rep;
}

bool axis_hull_check(const ExactComplexMatrix& a1, const ExactComplexMatrix& a2, int angles) {
    require_pair(a1, a2);
    if (!product_zero(a1, a2)) throw std::invalid_argument("axis_hull_check requires A1 A2 = 0");
    const ExactComplexMatrix a = a1 + GaussianRational(rat(0), rat(1)) * a2;
    const auto spec = normal_spectrum(a);
    std::vector<P2> pts;
    for (const auto& z : spec) {
        if (std::min(std::abs(z.real()), std::abs(z.imag())) > 1e-8) return false;
        pts.push_back({z.real(), z.imag()});
    }
    HermitianPencil p;
    p.n = a1.n();
    p.a1 = a1;
    p.a2 = a2;
    const HullResult hull = numerical_range_hull(p, angles);
    const Polygon2D spec_hull = convex_hull(pts);
    return hausdorff_distance(hull.polygon, spec_hull) <= 1e-7;
}

namespace {

Rational small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 3);
    return rat(num(rng), den(rng));
}

}  // namespace

ExactComplexMatrix random_skew_hermitian(int n, std::mt19937_64& rng) {
    ExactComplexMatrix s(n);
    for (int i = 0; i < n; ++i) {
        s(i, i) = GaussianRational(rat(0), small_rat(rng));
        for (int j = i + 1; j < n; ++j) {
            const GaussianRational z(small_rat(rng), small_rat(rng));
            s(i, j) = z;
            s(j, i) = -z.conj();
        }
    }
    return s;
}

ExactComplexMatrix random_hermitian_exact(int n, std::mt19937_64& rng) {
    ExactComplexMatrix h(n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = GaussianRational(small_rat(rng), rat(0));
        for (int j = i + 1; j < n; ++j) {
            const GaussianRational z(small_rat(rng), small_rat(rng));
            h(i, j) = z;
            h(j, i) = z.conj();
        }
    }
    return h;
}

ExactComplexMatrix cayley_unitary(const ExactComplexMatrix& skew) {
    const int n = skew.n();
    const ExactComplexMatrix eye = ExactComplexMatrix::identity(n);
    // I + S is invertible for skew-Hermitian S (eigenvalues 1 + i t).
    return (eye - skew) * inverse_exact(eye + skew);
}

std::pair<ExactComplexMatrix, ExactComplexMatrix> random_product_zero_pair(int n, int k,
                                                                           std::mt19937_64& rng) {
    if (k < 1 || k >= n) throw std::invalid_argument("random_product_zero_pair: need 1 <= k < n");
    const ExactComplexMatrix u = cayley_unitary(random_skew_hermitian(n, rng));
    const ExactComplexMatrix ustar = u.adjoint();
    const ExactComplexMatrix b = random_hermitian_exact(k, rng);
    const ExactComplexMatrix c = random_hermitian_exact(n - k, rng);
    ExactComplexMatrix d1(n), d2(n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) d1(i, j) = b(i, j);
    for (int i = 0; i < n - k; ++i)
        for (int j = 0; j < n - k; ++j) d2(k + i, k + j) = c(i, j);
    return {ustar * d1 * u, ustar * d2 * u};
}

}  // namespace nrange
