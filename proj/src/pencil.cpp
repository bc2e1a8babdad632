// SPDX-License-Identifier: Apache-2.0
#include "nrange/pencil.hpp"

#include <cmath>
#include <random>

namespace nrange {

HermitianPencil split(const ExactComplexMatrix& a) {
    const GaussianRational half(rat(1, 2), rat(0));
    const GaussianRational minus_half_i(rat(0), rat(-1, 2));
    HermitianPencil p;
    p.n = a.n();
    const ExactComplexMatrix adj = a.adjoint();
    p.a1 = half * (a + adj);
    p.a2 = minus_half_i * (a - adj);
    return p;
}

ExactComplexMatrix reconstruct(const HermitianPencil& p) {
    return p.a1 + GaussianRational(rat(0), rat(1)) * p.a2;
}

TrivariateForm pencil_form(const HermitianPencil& p) {
    const int n = p.n;
    std::vector<std::vector<ComplexForm>> m(static_cast<std::size_t>(n),
                                            std::vector<ComplexForm>(static_cast<std::size_t>(n), ComplexForm('y')));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            ComplexForm e('y');
            if (r == c) e.add_term(Mono{1, 0, 0}, GaussianRational(1));
            e.add_term(Mono{0, 1, 0}, p.a1(r, c));
            e.add_term(Mono{0, 0, 1}, p.a2(r, c));
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = std::move(e);
        }
    TrivariateForm f = det_exact(m);
    if (f.eval({Rational(1), Rational(0), Rational(0)}) != 1)
        throw NumericError("pencil determinant does not evaluate to 1 at (1,0,0)");
    return f;
}

ComplexMatrixF pencil_value(const HermitianPencil& p, double y1, double y2) {
    const int n = p.n;
    ComplexMatrixF f(n);
    const ComplexMatrixF a1 = ComplexMatrixF::from_exact(p.a1);
    const ComplexMatrixF a2 = ComplexMatrixF::from_exact(p.a2);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            f(r, c) = (r == c ? 1.0 : 0.0) + y1 * a1(r, c) + y2 * a2(r, c);
    return f;
}

double lmi_min_eig(const HermitianPencil& p, double y1, double y2) {
    return min_eigenvalue(pencil_value(p, y1, y2));
}

bool lmi_member(const HermitianPencil& p, const Rational& y1, const Rational& y2) {
    const double lam = lmi_min_eig(p, y1.get_d(), y2.get_d());
    if (std::abs(lam) >= 1e-9) return lam >= -1e-10;
    // Knife-edge point: decide exactly.
    ExactComplexMatrix f = ExactComplexMatrix::identity(p.n) + GaussianRational(y1) * p.a1 +
                           GaussianRational(y2) * p.a2;
    return psd_exact(f);
}

namespace {

// Shared per-ray kernel; both boundary drivers call exactly this.
LmiRay ray_kernel(const HermitianPencil& p, const ComplexMatrixF& a1, const ComplexMatrixF& a2,
                  double angle) {
    const int n = p.n;
    const double u1 = std::cos(angle), u2 = std::sin(angle);
    ComplexMatrixF d(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) d(r, c) = u1 * a1(r, c) + u2 * a2(r, c);
    const double lam = min_eigenvalue(d);
    LmiRay ray;
    ray.angle = angle;
    if (lam < 0.0) {
        ray.finite = true;
        ray.t = 1.0 / (-lam);
        ray.y1 = ray.t * u1;
        ray.y2 = ray.t * u2;
        ray.min_eig = lmi_min_eig(p, ray.y1, ray.y2);
    } else {
        ray.finite = false;
        ray.min_eig = lam;
    }
    return ray;
}

LmiBoundary assemble(const HermitianPencil& p, int m, bool parallel) {
    if (m < 8) throw std::invalid_argument("lmi_boundary_polygon needs at least 8 rays");
    const ComplexMatrixF a1 = ComplexMatrixF::from_exact(p.a1);
    const ComplexMatrixF a2 = ComplexMatrixF::from_exact(p.a2);
    LmiBoundary b;
    b.rays.resize(static_cast<std::size_t>(m));
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < m; ++j)
            b.rays[static_cast<std::size_t>(j)] = ray_kernel(p, a1, a2, 2.0 * M_PI * j / m);
    } else {
        for (int j = 0; j < m; ++j)
            b.rays[static_cast<std::size_t>(j)] = ray_kernel(p, a1, a2, 2.0 * M_PI * j / m);
    }
    for (const auto& r : b.rays)
        if (r.finite) b.polygon.vertices.push_back({r.y1, r.y2});
    return b;
}

}  // namespace

LmiBoundary lmi_boundary_polygon(const HermitianPencil& p, int rays) { return assemble(p, rays, true); }
LmiBoundary lmi_boundary_polygon_ref(const HermitianPencil& p, int rays) { return assemble(p, rays, false); }

RayHit lmi_ray(const HermitianPencil& p, double u1, double u2) {
    const int n = p.n;
    const ComplexMatrixF a1 = ComplexMatrixF::from_exact(p.a1);
    const ComplexMatrixF a2 = ComplexMatrixF::from_exact(p.a2);
    ComplexMatrixF d(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) d(r, c) = u1 * a1(r, c) + u2 * a2(r, c);
    const double lam = min_eigenvalue(d);
    if (lam < 0.0) return {true, 1.0 / (-lam)};
    return {false, 0.0};
}

HyperbolicityReport hyperbolicity_check(const TrivariateForm& f, const std::array<Rational, 3>& e,
                                        int trials, std::uint64_t seed) {
    if (f.eval(e) == 0) throw std::invalid_argument("hyperbolicity_check: form vanishes at the base point");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    HyperbolicityReport rep;
    rep.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        int d1 = 0, d2 = 0;
        while (d1 == 0 && d2 == 0) {
            d1 = coeff(rng);
            d2 = coeff(rng);
        }
        const std::array<Rational, 3> dir{Rational(0), rat(d1), rat(d2)};
        const UnivariatePoly r = restrict_to_line(f, e, dir);
        const int expected = square_free_part(r).degree();
        const int found = sturm_real_root_count(r);
        if (found != expected) {
            rep.hyperbolic = false;
            rep.failed_trial = trial;
            rep.failing_direction = dir;
            rep.expected_roots = expected;
            rep.found_roots = found;
            return rep;
        }
    }
    return rep;
}

}  // namespace nrange
