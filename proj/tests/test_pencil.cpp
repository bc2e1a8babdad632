// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "example_data.hpp"
#include "nrange/curves.hpp"
#include "nrange/pencil.hpp"

using namespace nrange;

namespace {

HermitianPencil load_pencil(const std::string& name) { return split(exdata::load(name)); }

ExactComplexMatrix random_matrix(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    ExactComplexMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = GaussianRational(rat(num(rng), den(rng)), rat(num(rng), den(rng)));
    return m;
}

}  // namespace

TEST_CASE("split: Hermitian input, displayed example, nilpotent formula") {
    std::mt19937_64 rng(41);
    ExactComplexMatrix h(3);
    for (int r = 0; r < 3; ++r)
        for (int c = r; c < 3; ++c) {
            const GaussianRational z(rat(r + c), rat(r == c ? 0 : 1));
            h(r, c) = z;
            h(c, r) = z.conj();
        }
    const HermitianPencil ph = split(h);
    CHECK(ph.a1 == h);
    CHECK(ph.a2.is_zero());

    const HermitianPencil p = load_pencil("ex_cubic.mat");
    ExactComplexMatrix a1(3), a2(3);
    a1(0, 2) = a1(1, 1) = a1(2, 0) = GaussianRational(1);
    a2(1, 2) = a2(2, 1) = GaussianRational(1);
    CHECK(p.a1 == a1);
    CHECK(p.a2 == a2);

    const HermitianPencil pn = load_pencil("ex_nilpotent.mat");
    CHECK(pn.a1(0, 1) == GaussianRational(rat(1, 2), rat(0)));
    CHECK(pn.a2(0, 1) == GaussianRational(rat(0), rat(-1, 2)));

    // Reconstruction is exact on random inputs.
    for (int rep = 0; rep < 50; ++rep) {
        const ExactComplexMatrix a = random_matrix(2 + static_cast<int>(rng() % 4), rng);
        const HermitianPencil q = split(a);
        CHECK(q.a1.is_hermitian());
        CHECK(q.a2.is_hermitian());
        CHECK(reconstruct(q) == a);
    }
}

TEST_CASE("pencil forms reproduce the printed polynomials") {
    CHECK(pencil_form(load_pencil("ex_cubic.mat")) == exdata::cubic3_p());
    CHECK(pencil_form(load_pencil("ex_star.mat")) == exdata::star4_p());
    CHECK(pencil_form(load_pencil("ex_polytope.mat")) == exdata::polytope4_p());
    CHECK(pencil_form(load_pencil("ex_union.mat")) == exdata::union9_p());
}

TEST_CASE("scaling covariance of the pencil form") {
    const HermitianPencil p = load_pencil("ex_cubic.mat");
    const Rational c = rat(3, 2);
    HermitianPencil q;
    q.n = p.n;
    q.a1 = GaussianRational(c) * p.a1;
    q.a2 = GaussianRational(c) * p.a2;
    const TrivariateForm pf = pencil_form(p);
    const TrivariateForm qf = pencil_form(q);
    // q(y0,y1,y2) == p(y0, c y1, c y2), coefficientwise.
    TrivariateForm expected('y');
    for (const auto& [m, coef] : pf.terms())
        expected.add_term(m, coef * rat_pow(c, static_cast<unsigned>(m.e1 + m.e2)));
    CHECK(qf == expected);
}

TEST_CASE("lmi_min_eig examples") {
    const HermitianPencil zero{2, ExactComplexMatrix(2), ExactComplexMatrix(2)};
    CHECK(lmi_min_eig(zero, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

    const HermitianPencil p45 = load_pencil("ex_polytope.mat");
    CHECK(std::abs(lmi_min_eig(p45, 0.0, 0.0) - 1.0) <= 1e-10);
    // Eigenvalues of I + y1 A1 are 1 + y1 {3,4,4,5}.
    CHECK(std::abs(lmi_min_eig(p45, -1.0 / 3.0, 0.0) - (-2.0 / 3.0)) <= 1e-10);
    // At (-1/4, 0) the pencil value is indefinite: 1 - 5/4 = -1/4. The point
    // satisfies p(1,-1/4,0) = 0 but lies outside the feasible component.
    CHECK(std::abs(lmi_min_eig(p45, -0.25, 0.0) - (-0.25)) <= 1e-10);
    CHECK(exdata::polytope4_p().eval({rat(1), rat(-1, 4), rat(0)}) == 0);
}

TEST_CASE("exact membership at knife-edge points") {
    const HermitianPencil p45 = load_pencil("ex_polytope.mat");
    // (-1/5, 0) sits exactly on the facet y1 = -1/5.
    CHECK(lmi_member(p45, rat(-1, 5), rat(0)));
    CHECK(!lmi_member(p45, rat(-1, 5) - rat(1, 100000000000L), rat(0)));
    CHECK(lmi_member(p45, rat(0), rat(0)));
    CHECK(!lmi_member(p45, rat(-1, 4), rat(0)));
    // Wedge corners are feasible boundary points.
    CHECK(lmi_member(p45, rat(-1, 5), rat(1, 5)));
    CHECK(lmi_member(p45, rat(-1, 5), rat(-1, 5)));
}

TEST_CASE("lmi_ray examples") {
    const HermitianPencil zero{3, ExactComplexMatrix(3), ExactComplexMatrix(3)};
    for (double ang : {0.0, 1.0, 2.5, 4.0}) {
        const RayHit h = lmi_ray(zero, std::cos(ang), std::sin(ang));
        CHECK(!h.finite);
    }
    const HermitianPencil p45 = load_pencil("ex_polytope.mat");
    const RayHit left = lmi_ray(p45, -1.0, 0.0);
    REQUIRE(left.finite);
    CHECK(std::abs(left.t - 0.2) <= 1e-12);
    const RayHit right = lmi_ray(p45, 1.0, 0.0);
    CHECK(!right.finite);  // A1 is positive definite
}

TEST_CASE("boundary polygon of the cubic example is a closed finite oval") {
    const HermitianPencil p = load_pencil("ex_cubic.mat");
    const LmiBoundary b = lmi_boundary_polygon(p, 720);
    for (const auto& r : b.rays) CHECK(r.finite);
    CHECK(b.polygon.vertices.size() == b.rays.size());
    CHECK(!b.polygon.degenerate());
    // Finite hits vanish on the determinant form.
    const TrivariateForm pf = pencil_form(p);
    double coeff_sum = 0.0;
    for (const auto& [m, c] : pf.terms()) coeff_sum += std::abs(c.get_d());
    for (const auto& r : b.rays) {
        const double v = form_eval_double(pf, 1.0, r.y1, r.y2);
        const double bound = 1e-7 * coeff_sum * std::pow(std::max(1.0, r.t), pf.degree());
        CHECK(std::abs(v) <= bound);
        CHECK(std::abs(r.min_eig) <= 1e-9);
    }
}

TEST_CASE("zero pencil boundary is empty") {
    const HermitianPencil zero{2, ExactComplexMatrix(2), ExactComplexMatrix(2)};
    const LmiBoundary b = lmi_boundary_polygon(zero, 16);
    for (const auto& r : b.rays) {
        CHECK(!r.finite);
        CHECK(r.min_eig == doctest::Approx(0.0).epsilon(1e-15));
    }
    CHECK(b.polygon.vertices.empty());
}

TEST_CASE("ray/form consistency on the example gallery") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    for (const char* name : {"ex_cubic.mat", "ex_ovals.mat", "ex_star.mat", "ex_union.mat",
                             "ex_polytope.mat"}) {
        const HermitianPencil p = load_pencil(name);
        const TrivariateForm pf = pencil_form(p);
        double coeff_sum = 0.0;
        for (const auto& [m, c] : pf.terms()) coeff_sum += std::abs(c.get_d());
        for (int rep = 0; rep < 100; ++rep) {
            const double a = ang(rng);
            const RayHit h = lmi_ray(p, std::cos(a), std::sin(a));
            if (!h.finite) continue;
            const double y1 = h.t * std::cos(a), y2 = h.t * std::sin(a);
            const double v = form_eval_double(pf, 1.0, y1, y2);
            CHECK(std::abs(v) <= 1e-7 * coeff_sum * std::pow(std::max(1.0, h.t), pf.degree()));
            // Membership/ray consistency on both sides of the crossing.
            CHECK(lmi_min_eig(p, y1 * (1.0 - 1e-9), y2 * (1.0 - 1e-9)) >= -1e-10);
            CHECK(lmi_min_eig(p, y1 * (1.0 + 1e-6), y2 * (1.0 + 1e-6)) < -1e-10);
        }
    }
}

TEST_CASE("hyperbolicity holds for pencil forms at the origin") {
    for (const char* name : {"ex_cubic.mat", "ex_ovals.mat", "ex_star.mat", "ex_polytope.mat"}) {
        const TrivariateForm pf = pencil_form(load_pencil(name));
        const HyperbolicityReport rep =
            hyperbolicity_check(pf, {rat(1), rat(0), rat(0)}, 100);
        CHECK(rep.hyperbolic);
        CHECK(rep.trials == 100);
    }
    // Cone form: roots at +-1/|d|.
    const TrivariateForm cone =
        exdata::terms('y', {{1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}});
    CHECK(hyperbolicity_check(cone, {rat(1), rat(0), rat(0)}, 100).hyperbolic);
}

TEST_CASE("hyperbolicity of random Hermitian pencils") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const HermitianPencil p = split(random_matrix(n, rng));
        const TrivariateForm pf = pencil_form(p);
        CHECK(hyperbolicity_check(pf, {rat(1), rat(0), rat(0)}, 25).hyperbolic);
    }
}

TEST_CASE("the dual quartic is not hyperbolic: refutation witness") {
    const TrivariateForm q = exdata::cubic3_q().with_var('y');
    CHECK(q.eval({rat(1), rat(1, 2), rat(0)}) != 0);
    const HyperbolicityReport rep = hyperbolicity_check(q, {rat(1), rat(1, 2), rat(0)}, 100);
    CHECK(!rep.hyperbolic);
    CHECK(rep.found_roots < rep.expected_roots);
    // The witness direction genuinely fails, independent of the trial loop.
    const UnivariatePoly r = restrict_to_line(q, {rat(1), rat(1, 2), rat(0)}, rep.failing_direction);
    CHECK(sturm_real_root_count(r) < square_free_part(r).degree());
}

TEST_CASE("hyperbolicity rejects a vanishing base point") {
    const TrivariateForm pf = exdata::cubic3_p();
    CHECK_THROWS_AS(hyperbolicity_check(pf, {rat(1), rat(1), rat(0)}, 10), std::invalid_argument);
}
