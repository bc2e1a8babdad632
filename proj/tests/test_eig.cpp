// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "example_data.hpp"
#include "nrange/eig.hpp"
#include "nrange/pencil.hpp"

using namespace nrange;

namespace {

ComplexMatrixF random_hermitian(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrixF h(n);
    for (int r = 0; r < n; ++r) {
        h(r, r) = u(rng);
        for (int c = r + 1; c < n; ++c) {
            const std::complex<double> z(u(rng), u(rng));
            h(r, c) = z;
            h(c, r) = std::conj(z);
        }
    }
    return h;
}

// ||H v_k - lambda_k v_k||_2 max over k, plus orthonormality defect.
std::pair<double, double> decomposition_defects(const ComplexMatrixF& h, const EigenDecomposition& d) {
    const int n = h.n();
    double resid = 0.0;
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int r = 0; r < n; ++r) {
            std::complex<double> hv = 0.0;
            for (int c = 0; c < n; ++c) hv += h(r, c) * d.vectors(c, k);
            hv -= d.eigenvalues[static_cast<std::size_t>(k)] * d.vectors(r, k);
            s += std::norm(hv);
        }
        resid = std::max(resid, std::sqrt(s));
    }
    double ortho = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> dot = 0.0;
            for (int r = 0; r < n; ++r) dot += std::conj(d.vectors(r, i)) * d.vectors(r, j);
            ortho = std::max(ortho, std::abs(dot - (i == j ? 1.0 : 0.0)));
        }
    return {resid, ortho};
}

ComplexMatrixF random_unitary(int n, std::mt19937_64& rng) {
    // Composition of elementary complex rotations.
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    ComplexMatrixF u = ComplexMatrixF::identity(n);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const double th = ang(rng), ph = ang(rng);
            const double c = std::cos(th), s = std::sin(th);
            const std::complex<double> e(std::cos(ph), std::sin(ph));
            for (int r = 0; r < n; ++r) {
                const auto up = u(r, p), uq = u(r, q);
                u(r, p) = c * up - s * e * uq;
                u(r, q) = s * std::conj(e) * up + c * uq;
            }
        }
    return u;
}

}  // namespace

TEST_CASE("trivial spectra") {
    const EigenDecomposition d = hermitian_eig(ComplexMatrixF::identity(3));
    for (double l : d.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-14));

    ComplexMatrixF flip(2);
    flip(0, 1) = 1.0;
    flip(1, 0) = 1.0;
    const EigenDecomposition d2 = hermitian_eig(flip);
    CHECK(d2.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(d2.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    ComplexMatrixF bad(2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(bad), std::invalid_argument);
}

TEST_CASE("circulant Hermitian part of the polytope example") {
    const HermitianPencil p = split(exdata::load("ex_polytope.mat"));
    const EigenDecomposition d = hermitian_eig(ComplexMatrixF::from_exact(p.a1));
    const double expect[4] = {3.0, 4.0, 4.0, 5.0};
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(d.eigenvalues[static_cast<std::size_t>(k)] - expect[k]) <= 1e-10);
}

TEST_CASE("residual and orthonormality bounds over random Hermitian matrices") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dim(2, 16);
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = dim(rng);
        const ComplexMatrixF h = random_hermitian(n, rng);
        const EigenDecomposition d = hermitian_eig(h);
        const auto [resid, ortho] = decomposition_defects(h, d);
        CHECK(resid <= 1e-10 * (1.0 + h.frobenius()));
        CHECK(ortho <= 1e-10);
        for (int k = 1; k < n; ++k)
            CHECK(d.eigenvalues[static_cast<std::size_t>(k)] >= d.eigenvalues[static_cast<std::size_t>(k - 1)]);
    }
}

TEST_CASE("unitary invariance and trace identity") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const ComplexMatrixF h = random_hermitian(n, rng);
        const ComplexMatrixF u = random_unitary(n, rng);
        const ComplexMatrixF h2 = u.adjoint() * h * u;
        const auto e1 = hermitian_eig(h).eigenvalues;
        const auto e2 = hermitian_eig(h2).eigenvalues;
        double tr = 0.0, esum = 0.0;
        for (int k = 0; k < n; ++k) {
            CHECK(std::abs(e1[static_cast<std::size_t>(k)] - e2[static_cast<std::size_t>(k)]) <= 1e-9);
            tr += h(k, k).real();
            esum += e1[static_cast<std::size_t>(k)];
        }
        CHECK(std::abs(tr - esum) <= 1e-9 * (1.0 + h.frobenius()));
    }
}

TEST_CASE("normality test") {
    const ExactComplexMatrix poly = exdata::load("ex_polytope.mat");
    CHECK(is_normal(poly));  // circulant
    const ExactComplexMatrix cubic = exdata::load("ex_cubic.mat");
    CHECK(!is_normal(cubic));
    const HermitianPencil p = split(cubic);
    CHECK(is_normal(p.a1));  // Hermitian matrices are normal
}

TEST_CASE("normal spectrum") {
    ExactComplexMatrix d(2);
    d(0, 0) = GaussianRational(1, 2);
    d(1, 1) = GaussianRational(3, 0);
    const auto spec = normal_spectrum(d);
    CHECK(std::abs(spec[0] - std::complex<double>(1, 2)) <= 1e-12);
    CHECK(std::abs(spec[1] - std::complex<double>(3, 0)) <= 1e-12);

    const auto poly_spec = normal_spectrum(exdata::load("ex_polytope.mat"));
    REQUIRE(poly_spec.size() == 4);
    CHECK(std::abs(poly_spec[0] - std::complex<double>(3, 0)) <= 1e-9);
    CHECK(std::abs(poly_spec[1] - std::complex<double>(4, -1)) <= 1e-9);
    CHECK(std::abs(poly_spec[2] - std::complex<double>(4, 1)) <= 1e-9);
    CHECK(std::abs(poly_spec[3] - std::complex<double>(5, 0)) <= 1e-9);

    CHECK_THROWS_AS(normal_spectrum(exdata::load("ex_cubic.mat")), std::invalid_argument);
}
