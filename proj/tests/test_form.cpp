// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "example_data.hpp"
#include "nrange/eig.hpp"
#include "nrange/form.hpp"

using namespace nrange;
using exdata::linear;
using exdata::terms;

namespace {

Rational rnd_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    return rat(num(rng), den(rng));
}

TrivariateForm random_form(int degree, std::mt19937_64& rng, char var = 'y') {
    std::uniform_int_distribution<long> c(-9, 9);
    TrivariateForm f(var);
    for (int e0 = 0; e0 <= degree; ++e0)
        for (int e1 = 0; e1 + e0 <= degree; ++e1)
            f.add_term(Mono{e0, e1, degree - e0 - e1}, rat(c(rng)));
    if (f.is_zero()) f.add_term(Mono{degree, 0, 0}, rat(1));
    return f;
}

// Independent oracle: recursive cofactor expansion along the first row.
TrivariateForm cofactor_det(const std::vector<std::vector<TrivariateForm>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    TrivariateForm acc('y');
    bool started = false;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<TrivariateForm>> sub(n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) sub[r - 1].push_back(m[r][cc]);
        TrivariateForm term = m[0][c] * cofactor_det(sub);
        if (c % 2 == 1) term = -term;
        if (!started) {
            acc = term;
            started = true;
        } else {
            acc += term;
        }
    }
    return acc;
}

// Distinct real roots by exact sign changes on a fine uniform grid inside
// the Cauchy bound, applied to the square-free part (even-multiplicity
// roots produce no sign change; random coefficients do hit them, see the
// construction-based suite for independent multiplicity coverage).
int bisection_root_count(const UnivariatePoly& input) {
    const UnivariatePoly f = square_free_part(input).primitive_part();
    const int n = f.degree();
    REQUIRE(n >= 0);
    Rational bound(1);
    for (int k = 0; k < n; ++k) {
        const Rational r = abs(f.coeff(k) / f.leading());
        if (r > bound) bound = r;
    }
    bound += 1;
    const int grid = 2048;
    const Rational step = 2 * bound / grid;
    int count = 0;
    int prev_sign = 0;
    for (int j = 0; j <= grid; ++j) {
        const Rational t = -bound + j * step;
        const int s = sign(f.eval(t));
        if (s == 0) {
            ++count;  // exact grid hit
            prev_sign = 0;
            continue;
        }
        if (prev_sign != 0 && s != prev_sign) ++count;
        prev_sign = s;
    }
    return count;
}

}  // namespace

TEST_CASE("grevlex order and leading terms") {
    CHECK(grevlex_cmp(Mono{2, 0, 0}, Mono{1, 1, 0}) > 0);
    CHECK(grevlex_cmp(Mono{1, 1, 0}, Mono{0, 2, 0}) > 0);
    CHECK(grevlex_cmp(Mono{0, 2, 0}, Mono{1, 0, 1}) > 0);
    CHECK(grevlex_cmp(Mono{1, 0, 1}, Mono{0, 1, 1}) > 0);
    CHECK(grevlex_cmp(Mono{0, 1, 1}, Mono{0, 0, 2}) > 0);
    CHECK(grevlex_cmp(Mono{0, 0, 2}, Mono{1, 0, 0}) > 0);
    const TrivariateForm p = exdata::cubic3_p();
    CHECK(p.leading().first == Mono{3, 0, 0});
    CHECK(p.leading().second == 1);
}

TEST_CASE("form arithmetic enforces homogeneity") {
    TrivariateForm f = linear('y', 1, 2, 3);
    CHECK_THROWS_AS(f += TrivariateForm::constant(rat(1), 'y'), std::invalid_argument);
    CHECK((f - f).is_zero());
    const TrivariateForm g = f * f;
    CHECK(g.degree() == 2);
    CHECK(g.eval({rat(1), rat(1), rat(1)}) == 36);
}

TEST_CASE("det_exact trivial examples") {
    using M = std::vector<std::vector<TrivariateForm>>;
    const M one{{TrivariateForm::variable(0)}};
    CHECK(det_exact(one) == TrivariateForm::variable(0));

    const TrivariateForm z('y');
    const M diag{{linear('y', 1, 1, 0), z}, {z, linear('y', 1, -1, 0)}};
    CHECK(det_exact(diag) == terms('y', {{1, 2, 0, 0}, {-1, 0, 2, 0}}));

    const M bad{{z, z}};
    CHECK_THROWS_AS(det_exact(bad), std::invalid_argument);
}

TEST_CASE("det_exact matches the displayed 3x3 pencil") {
    // [[y0, 0, y1], [0, y0+y1, y2], [y1, y2, y0]]
    const TrivariateForm z('y');
    const TrivariateForm y0 = TrivariateForm::variable(0);
    const TrivariateForm y1 = TrivariateForm::variable(1);
    const TrivariateForm y2 = TrivariateForm::variable(2);
    const std::vector<std::vector<TrivariateForm>> m{
        {y0, z, y1}, {z, y0 + y1, y2}, {y1, y2, y0}};
    const TrivariateForm p = det_exact(m);
    CHECK(p == exdata::cubic3_p());
    CHECK(p == terms('y', {{1, 3, 0, 0}, {1, 2, 1, 0}, {-1, 1, 2, 0}, {-1, 0, 3, 0}, {-1, 1, 0, 2}}));
}

TEST_CASE("det_exact agrees with cofactor expansion on random symbolic matrices") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            std::vector<std::vector<TrivariateForm>> m(static_cast<std::size_t>(n));
            for (auto& row : m)
                for (int j = 0; j < n; ++j) row.push_back(linear('y', c(rng), c(rng), c(rng)));
            CHECK(det_exact(m) == cofactor_det(m));
        }
    }
}

TEST_CASE("form division examples") {
    const TrivariateForm a = terms('y', {{1, 2, 0, 0}, {-1, 0, 2, 0}});
    const auto q = form_divide(a, linear('y', 1, -1, 0));
    REQUIRE(q.has_value());
    CHECK(*q == linear('y', 1, 1, 0));

    const TrivariateForm b = terms('y', {{1, 2, 0, 0}, {1, 0, 2, 0}});
    CHECK(!form_divide(b, linear('y', 1, -1, 0)).has_value());

    CHECK_THROWS_AS(form_divide(a, TrivariateForm('y')), std::invalid_argument);
}

TEST_CASE("dividing the degree-9 product by its conic factor") {
    const TrivariateForm p = exdata::union9_p();
    const TrivariateForm conic = exdata::union9_factor_conic();
    const auto q = form_divide(p, conic);
    REQUIRE(q.has_value());
    CHECK(q->degree() == 7);
    const TrivariateForm expected =
        rat(1, 256) * (exdata::union9_factor_cubic() * conic * conic);
    CHECK(*q == expected);
    // And the full factorization reassembles.
    CHECK(*q * conic == p);
}

TEST_CASE("divide round-trips on random form pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int rep = 0; rep < 200; ++rep) {
        const TrivariateForm a = random_form(deg(rng), rng);
        const TrivariateForm b = random_form(deg(rng), rng);
        const auto q = form_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("restrict_to_line") {
    const TrivariateForm f = terms('y', {{1, 2, 0, 0}, {-1, 0, 2, 0}});
    const std::array<Rational, 3> e{rat(1), rat(0), rat(0)};
    const UnivariatePoly r = restrict_to_line(f, e, {rat(0), rat(1), rat(0)});
    CHECK(r == UnivariatePoly({rat(1), rat(0), rat(-1)}));

    const UnivariatePoly r2 = restrict_to_line(exdata::cubic3_p(), e, {rat(0), rat(0), rat(1)});
    CHECK(r2 == UnivariatePoly({rat(1), rat(0), rat(-1)}));

    CHECK_THROWS_AS(restrict_to_line(f, e, {rat(0), rat(0), rat(0)}), std::invalid_argument);
}

TEST_CASE("sturm examples") {
    CHECK(sturm_real_root_count(UnivariatePoly({rat(1), rat(0), rat(1)})) == 0);   // t^2+1
    CHECK(sturm_real_root_count(UnivariatePoly({rat(0), rat(-1), rat(0), rat(1)})) == 3);  // t^3-t
    CHECK(sturm_real_root_count(UnivariatePoly({rat(5)})) == 0);
    CHECK_THROWS_AS(sturm_real_root_count(UnivariatePoly()), std::invalid_argument);
    // Repeated roots count once: (t-1)^2 (t+2)
    const UnivariatePoly rep =
        UnivariatePoly({rat(-1), rat(1)}) * UnivariatePoly({rat(-1), rat(1)}) *
        UnivariatePoly({rat(2), rat(1)});
    CHECK(sturm_real_root_count(rep) == 2);
}

TEST_CASE("sturm counts match construction-known roots") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> root(-6, 6);
    std::uniform_int_distribution<int> nlin(0, 4), nquad(0, 2), mult(1, 2);
    for (int rep = 0; rep < 100; ++rep) {
        UnivariatePoly f = UnivariatePoly::constant(rat(1 + (rep % 3)));
        std::vector<long> used;
        int expected = 0;
        const int L = nlin(rng);
        for (int i = 0; i < L; ++i) {
            long r = root(rng);
            bool fresh = true;
            for (long u : used) fresh = fresh && (u != r);
            const int m = mult(rng);
            for (int k = 0; k < m; ++k) f = f * UnivariatePoly({rat(-r), rat(1)});
            if (fresh) {
                ++expected;
                used.push_back(r);
            }
        }
        const int Q = nquad(rng);
        for (int i = 0; i < Q; ++i) {
            // t^2 + bt + c with negative discriminant: no real roots.
            long b = root(rng);
            long c = std::abs(root(rng)) + (b * b) / 4 + 1;
            f = f * UnivariatePoly({rat(c), rat(b), rat(1)});
        }
        if (f.degree() == 0) {
            CHECK(sturm_real_root_count(f) == 0);
        } else {
            CHECK(sturm_real_root_count(f) == expected);
        }
    }
}

TEST_CASE("sturm counts match the interval-bisection oracle on random polynomials") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = deg(rng);
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
        for (auto& x : coeffs) x = rat(c(rng));
        if (coeffs.back() == 0) coeffs.back() = rat(1);
        const UnivariatePoly f(std::move(coeffs));
        CHECK(sturm_real_root_count(f) == bisection_root_count(f));
    }
}

TEST_CASE("restrictions of the cubic pencil form have all-real roots") {
    // Roots along (0,d1,d2) are -1/lambda for eigenvalues lambda of
    // d1 A1 + d2 A2, real and generically distinct.
    const TrivariateForm p = exdata::cubic3_p();
    const std::array<Rational, 3> e{rat(1), rat(0), rat(0)};
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int rep = 0; rep < 50; ++rep) {
        long d1 = c(rng), d2 = c(rng);
        if (d1 == 0 && d2 == 0) d1 = 1;
        const UnivariatePoly r = restrict_to_line(p, e, {rat(0), rat(d1), rat(d2)});
        CHECK(sturm_real_root_count(r) == square_free_part(r).degree());
    }
}

TEST_CASE("normalization") {
    const auto nf = form_normalize(exdata::star4_p());
    CHECK(nf.scale == rat(1, 64));
    CHECK(nf.primitive.leading().second == 64);
    CHECK(nf.primitive == terms('y', {{64, 4, 0, 0},
                                      {-52, 2, 2, 0},
                                      {-52, 2, 0, 2},
                                      {1, 0, 4, 0},
                                      {34, 0, 2, 2},
                                      {1, 0, 0, 4}}));

    const auto n2 = form_normalize(terms('y', {{2, 2, 0, 0}}));
    CHECK(n2.primitive == terms('y', {{1, 2, 0, 0}}));
    CHECK(n2.scale == 2);

    const auto n3 = form_normalize(terms('y', {{-3, 1, 1, 0}}));
    CHECK(n3.primitive == terms('y', {{1, 1, 1, 0}}));
    CHECK(n3.scale == -3);

    CHECK_THROWS_AS(form_normalize(TrivariateForm('y')), std::invalid_argument);

    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        TrivariateForm f = random_form(3, rng);
        f = rnd_rat(rng) * f;
        if (f.is_zero()) continue;
        const auto a = form_normalize(f);
        CHECK(a.primitive * TrivariateForm::constant(a.scale, 'y') ==
              TrivariateForm::constant(rat(1), 'y') * f);
        const auto b = form_normalize(a.primitive);
        CHECK(b.scale == 1);
        CHECK(b.primitive == a.primitive);
    }
}

TEST_CASE("evaluation, exact and floating") {
    const TrivariateForm p41 = exdata::cubic3_p();
    CHECK(p41.eval({rat(1), rat(0), rat(0)}) == 1);
    const TrivariateForm p45 = exdata::polytope4_p();
    CHECK(p45.eval({rat(1), rat(-1, 4), rat(0)}) == 0);
    const TrivariateForm f = terms('y', {{1, 2, 0, 0}, {-1, 0, 2, 0}});
    CHECK(f.eval({rat(1), rat(1), rat(5)}) == 0);

    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 50; ++rep) {
        const TrivariateForm g = random_form(4, rng);
        const Rational x1 = rnd_rat(rng), x2 = rnd_rat(rng);
        const Rational exact = g.eval({rat(1), x1, x2});
        const double approx = form_eval_double(g, 1.0, x1.get_d(), x2.get_d());
        CHECK(std::abs(approx - exact.get_d()) <= 1e-12 * (1.0 + std::abs(exact.get_d())));
    }
}
