// SPDX-License-Identifier: Apache-2.0
#include "nrange/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nrange {

namespace {

// Samples for one angle: all n branches, ascending eigenvalue order.
// Clusters of equal eigenvalues are refined by diagonalizing the compression
// of the perpendicular combination -sin(theta) A1 + cos(theta) A2: an
// arbitrary eigenspace vector lands anywhere in the cluster's flat segment
// (off the curve at nodes/bitangents), while the refined vectors pick the
// segment endpoints, which are limits of neighboring tangency points and
// hence genuine curve points.
void sweep_kernel(const ComplexMatrixF& a1, const ComplexMatrixF& a2, double theta,
                  CurveSample* out) {
    using C = std::complex<double>;
    const int n = a1.n();
    const double c = std::cos(theta), s = std::sin(theta);
    ComplexMatrixF h(n);
    for (int r = 0; r < n; ++r)
        for (int cc = 0; cc < n; ++cc) h(r, cc) = c * a1(r, cc) + s * a2(r, cc);
    EigenDecomposition d = hermitian_eig(h);
    const double cluster_tol = 1e-10 * (1.0 + h.frobenius());
    int lo = 0;
    while (lo < n) {
        int hi = lo + 1;
        while (hi < n && d.eigenvalues[static_cast<std::size_t>(hi)] -
                                 d.eigenvalues[static_cast<std::size_t>(hi - 1)] <=
                             cluster_tol)
            ++hi;
        const int blk = hi - lo;
        if (blk >= 2) {
            ComplexMatrixF perp(blk);
            for (int i = 0; i < blk; ++i)
                for (int j = 0; j < blk; ++j) {
                    C acc = 0.0;
                    for (int r = 0; r < n; ++r) {
                        C pv = 0.0;
                        for (int cc = 0; cc < n; ++cc)
                            pv += (-s * a1(r, cc) + c * a2(r, cc)) * d.vectors(cc, lo + j);
                        acc += std::conj(d.vectors(r, lo + i)) * pv;
                    }
                    perp(i, j) = acc;
                }
            const EigenDecomposition dp = hermitian_eig(perp);
            ComplexMatrixF refined(n);  // columns 0..blk-1 used
            for (int r = 0; r < n; ++r)
                for (int j = 0; j < blk; ++j) {
                    C acc = 0.0;
                    for (int i = 0; i < blk; ++i) acc += d.vectors(r, lo + i) * dp.vectors(i, j);
                    refined(r, j) = acc;
                }
            for (int r = 0; r < n; ++r)
                for (int j = 0; j < blk; ++j) d.vectors(r, lo + j) = refined(r, j);
        }
        lo = hi;
    }
    for (int k = 0; k < n; ++k) {
        C q1 = 0.0, q2 = 0.0;
        for (int r = 0; r < n; ++r) {
            C a1w = 0.0, a2w = 0.0;
            for (int cc = 0; cc < n; ++cc) {
                a1w += a1(r, cc) * d.vectors(cc, k);
                a2w += a2(r, cc) * d.vectors(cc, k);
            }
            q1 += std::conj(d.vectors(r, k)) * a1w;
            q2 += std::conj(d.vectors(r, k)) * a2w;
        }
        out[k].theta = theta;
        out[k].branch = k + 1;
        out[k].lambda = d.eigenvalues[static_cast<std::size_t>(k)];
        out[k].x1 = q1.real();
        out[k].x2 = q2.real();
    }
}

std::vector<CurveSample> sweep_impl(const HermitianPencil& p, int m, bool parallel) {
    if (m < 8) throw std::invalid_argument("sweep needs at least 8 angles");
    const ComplexMatrixF a1 = ComplexMatrixF::from_exact(p.a1);
    const ComplexMatrixF a2 = ComplexMatrixF::from_exact(p.a2);
    const int n = p.n;
    std::vector<CurveSample> samples(static_cast<std::size_t>(m) * n);
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < m; ++j)
            sweep_kernel(a1, a2, 2.0 * M_PI * j / m, samples.data() + static_cast<std::size_t>(j) * n);
    } else {
        for (int j = 0; j < m; ++j)
            sweep_kernel(a1, a2, 2.0 * M_PI * j / m, samples.data() + static_cast<std::size_t>(j) * n);
    }
    return samples;
}

}  // namespace

std::vector<CurveSample> sweep(const HermitianPencil& p, int angles) { return sweep_impl(p, angles, true); }
std::vector<CurveSample> sweep_ref(const HermitianPencil& p, int angles) { return sweep_impl(p, angles, false); }

double support_function(const HermitianPencil& p, double theta) {
    const int n = p.n;
    const ComplexMatrixF a1 = ComplexMatrixF::from_exact(p.a1);
    const ComplexMatrixF a2 = ComplexMatrixF::from_exact(p.a2);
    const double c = std::cos(theta), s = std::sin(theta);
    ComplexMatrixF h(n);
    for (int r = 0; r < n; ++r)
        for (int cc = 0; cc < n; ++cc) h(r, cc) = c * a1(r, cc) + s * a2(r, cc);
    return max_eigenvalue(h);
}

HullResult numerical_range_hull(const HermitianPencil& p, int angles) {
    const int n = p.n;
    const std::vector<CurveSample> samples = sweep(p, angles);
    std::vector<P2> top;
    top.reserve(static_cast<std::size_t>(angles));
    for (int j = 0; j < angles; ++j) {
        const CurveSample& s = samples[static_cast<std::size_t>(j) * n + (n - 1)];
        top.push_back({s.x1, s.x2});
    }
    HullResult r;
    r.polygon = convex_hull(top);
    r.degenerate = r.polygon.degenerate();
    return r;
}

CompoundMatrix second_mixed_compound(const ExactComplexMatrix& a, const ExactComplexMatrix& b) {
    const int n = a.n();
    if (b.n() != n) throw std::invalid_argument("second_mixed_compound: size mismatch");
    if (n < 2) throw std::invalid_argument("second_mixed_compound needs n >= 2");
    const int nn = n * (n - 1) / 2;
    CompoundMatrix cm;
    cm.n = n;
    cm.entries = ExactComplexMatrix(nn);
    const Rational half = rat(1, 2);
    int rr = 0;
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = r1 + 1; r2 < n; ++r2, ++rr) {
            int cc = 0;
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = c1 + 1; c2 < n; ++c2, ++cc) {
                    cm.entries(rr, cc) =
                        half * (a(r1, c1) * b(r2, c2) + a(r2, c2) * b(r1, c1) -
                                a(r1, c2) * b(r2, c1) - a(r2, c1) * b(r1, c2));
                }
        }
    return cm;
}

namespace {

// Exact Newton interpolation through distinct rational nodes; returns
// monomial coefficients, ascending.
std::vector<Rational> interpolate_nodes(const std::vector<Rational>& nodes,
                                        const std::vector<Rational>& values) {
    const std::size_t k = nodes.size();
    std::vector<Rational> dd = values;  // divided differences, in place
    for (std::size_t level = 1; level < k; ++level)
        for (std::size_t i = k - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    // Horner expansion of the Newton form, highest node first.
    std::vector<Rational> coeff(k, Rational(0));
    coeff[0] = dd[k - 1];
    for (std::size_t i = k - 1; i-- > 0;) {
        for (std::size_t j = k - 1; j >= 1; --j) coeff[j] = coeff[j - 1] - nodes[i] * coeff[j];
        coeff[0] = dd[i] - nodes[i] * coeff[0];
    }
    return coeff;
}

}  // namespace

namespace detail {

TrivariateForm fiedler_impl(const ExactComplexMatrix& a, bool parallel) {
    const int n = a.n();
    if (n < 2) throw std::invalid_argument("fiedler_dual_form needs n >= 2");
    const HermitianPencil p = split(a);
    const ExactComplexMatrix a0 = ExactComplexMatrix::identity(n);
    const ExactComplexMatrix* mats[3] = {&a0, &p.a1, &p.a2};
    const int nn = n * (n - 1) / 2;
    // Constant compound blocks K_ij = [A_i, A_j]; identity borders are I_N,
    // the only reading consistent with N x N compound blocks.
    ExactComplexMatrix kblock[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            kblock[i][j] = second_mixed_compound(*mats[i], *mats[j]).entries;
            if (j != i) kblock[j][i] = kblock[i][j];  // [A,B] = [B,A]
        }

    const int deg = 2 * nn;
    const int pts = deg + 1;
    // Dehomogenized determinant q(1,u,v) on an integer grid, exactly; the
    // full determinant is homogeneous of degree exactly 2N (every expansion
    // term picks N border entries for the first N rows and N more for the
    // first N columns), so the bivariate coefficients homogenize uniquely.
    std::vector<std::vector<Rational>> val(static_cast<std::size_t>(pts),
                                           std::vector<Rational>(static_cast<std::size_t>(pts)));
    std::vector<Rational> nodes(static_cast<std::size_t>(pts));
    for (int i = 0; i < pts; ++i) nodes[static_cast<std::size_t>(i)] = rat(i - nn);

    auto eval_cell = [&](int i, int j) {
        ExactComplexMatrix m(4 * nn);
        const Rational xs[3] = {Rational(1), nodes[static_cast<std::size_t>(i)],
                                nodes[static_cast<std::size_t>(j)]};
        for (int b = 0; b < 3; ++b)
            for (int t = 0; t < nn; ++t) {
                m(t, (b + 1) * nn + t) = GaussianRational(xs[b]);
                m((b + 1) * nn + t, t) = GaussianRational(xs[b]);
            }
        for (int bi = 0; bi < 3; ++bi)
            for (int bj = 0; bj < 3; ++bj)
                for (int r = 0; r < nn; ++r)
                    for (int c = 0; c < nn; ++c)
                        m((bi + 1) * nn + r, (bj + 1) * nn + c) = kblock[bi][bj](r, c);
        const GaussianRational d = det_exact_gauss(m);
        if (d.im != 0) throw NumericError("fiedler determinant is not real");
        val[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d.re;
    };

    if (parallel) {
#pragma omp parallel for collapse(2) schedule(dynamic)
        for (int i = 0; i < pts; ++i)
            for (int j = 0; j < pts; ++j) eval_cell(i, j);
    } else {
        for (int i = 0; i < pts; ++i)
            for (int j = 0; j < pts; ++j) eval_cell(i, j);
    }

    // Tensor-product Newton interpolation: along v per row, then along u.
    std::vector<std::vector<Rational>> vcoeff(static_cast<std::size_t>(pts));
    for (int i = 0; i < pts; ++i)
        vcoeff[static_cast<std::size_t>(i)] = interpolate_nodes(nodes, val[static_cast<std::size_t>(i)]);
    TrivariateForm q('x');
    for (int b = 0; b < pts; ++b) {
        std::vector<Rational> col(static_cast<std::size_t>(pts));
        for (int i = 0; i < pts; ++i)
            col[static_cast<std::size_t>(i)] = vcoeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
        const std::vector<Rational> ucoeff = interpolate_nodes(nodes, col);
        for (int aexp = 0; aexp < pts; ++aexp) {
            const Rational& c = ucoeff[static_cast<std::size_t>(aexp)];
            if (c == 0) continue;
            if (aexp + b > deg)
                throw NumericError("fiedler interpolation: degree overflow (non-homogeneous)");
            q.add_term(Mono{deg - aexp - b, aexp, b}, c);
        }
    }
    if (q.is_zero()) throw NumericError("fiedler determinant vanished identically");
    return q;
}

}  // namespace detail

TrivariateForm fiedler_dual_form(const ExactComplexMatrix& a) { return detail::fiedler_impl(a, true); }
TrivariateForm fiedler_dual_form_ref(const ExactComplexMatrix& a) { return detail::fiedler_impl(a, false); }

namespace {

double scaled_residual_one(const TrivariateForm& q, double coeff_sum, const CurveSample& s) {
    const double norm_inf = std::max({1.0, std::abs(s.x1), std::abs(s.x2)});
    const double denom = coeff_sum * std::pow(norm_inf, q.degree());
    return std::abs(form_eval_double(q, 1.0, s.x1, s.x2)) / denom;
}

double coeff_abs_sum(const TrivariateForm& q) {
    double s = 0.0;
    for (const auto& [m, c] : q.terms()) s += std::abs(c.get_d());
    return s;
}

}  // namespace

double dual_residual(const TrivariateForm& q, const std::vector<CurveSample>& samples) {
    if (q.is_zero()) throw std::invalid_argument("dual_residual of zero form");
    const double cs = coeff_abs_sum(q);
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(samples.size()); ++i)
        worst = std::max(worst, scaled_residual_one(q, cs, samples[static_cast<std::size_t>(i)]));
    return worst;
}

double dual_residual(const std::vector<TrivariateForm>& components,
                     const std::vector<CurveSample>& samples) {
    if (components.empty()) throw std::invalid_argument("dual_residual with no components");
    std::vector<double> sums;
    for (const auto& q : components) {
        if (q.is_zero()) throw std::invalid_argument("dual_residual of zero form");
        sums.push_back(coeff_abs_sum(q));
    }
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(samples.size()); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < components.size(); ++k)
            best = std::min(best, scaled_residual_one(components[k], sums[k], samples[static_cast<std::size_t>(i)]));
        worst = std::max(worst, best);
    }
    return worst;
}

P2 psd_projection_point(const HermitianPencil& p, const ComplexMatrixF& w) {
    using C = std::complex<double>;
    const int n = p.n;
    if (w.n() != n) throw std::invalid_argument("psd_projection_point: size mismatch");
    const ComplexMatrixF a1 = ComplexMatrixF::from_exact(p.a1);
    const ComplexMatrixF a2 = ComplexMatrixF::from_exact(p.a2);
    C tr0 = 0.0, tr1 = 0.0, tr2 = 0.0;
    for (int r = 0; r < n; ++r) {
        tr0 += w(r, r);
        for (int c = 0; c < n; ++c) {
            // <A,W> = trace(A* W) with A Hermitian.
            tr1 += std::conj(a1(c, r)) * w(c, r);
            tr2 += std::conj(a2(c, r)) * w(c, r);
        }
    }
    if (!(tr0.real() > 0.0)) throw std::invalid_argument("psd_projection_point: trace(W) must be positive");
    return {tr1.real() / tr0.real(), tr2.real() / tr0.real()};
}

DualityGap duality_gap(const HermitianPencil& p, int angles) {
    const HullResult hull = numerical_range_hull(p, angles);
    const LmiBoundary boundary = lmi_boundary_polygon(p, angles);
    DualityGap g;
    g.global_min = std::numeric_limits<double>::infinity();
    g.worst_tightness = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& ray : boundary.rays) {
        if (!ray.finite) continue;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& v : hull.polygon.vertices) {
            const double ip = 1.0 + v.x * ray.y1 + v.y * ray.y2;
            best = std::min(best, ip);
            g.global_min = std::min(g.global_min, ip);
        }
        g.worst_tightness = std::max(g.worst_tightness, best);
        any = true;
    }
    if (!any) {
        g.global_min = 0.0;
        g.worst_tightness = 0.0;
    }
    return g;
}

}  // namespace nrange
