// SPDX-License-Identifier: Apache-2.0
#include "nrange/form.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

namespace nrange {

ComplexForm complexify(const TrivariateForm& f) {
    ComplexForm g(f.var());
    for (const auto& [m, c] : f.terms()) g.add_term(m, GaussianRational(c));
    return g;
}

TrivariateForm real_form(const ComplexForm& f) {
    TrivariateForm g(f.var());
    for (const auto& [m, c] : f.terms()) {
        if (c.im != 0)
            throw std::runtime_error("nonzero imaginary part in determinant form (non-Hermitian pencil?)");
        g.add_term(m, c.re);
    }
    return g;
}

double form_eval_double(const TrivariateForm& f, double x0, double x1, double x2) {
    int d = f.degree();
    if (d < 0) return 0.0;
    std::array<std::vector<double>, 3> pw;
    const double xs[3] = {x0, x1, x2};
    for (int v = 0; v < 3; ++v) {
        pw[v].resize(static_cast<std::size_t>(d) + 1);
        pw[v][0] = 1.0;
        for (int e = 1; e <= d; ++e) pw[v][e] = pw[v][e - 1] * xs[v];
    }
    double sum = 0.0, comp = 0.0;  // Kahan
    for (const auto& [m, c] : f.terms()) {
        const double term = c.get_d() * pw[0][m.e0] * pw[1][m.e1] * pw[2][m.e2];
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

template <class K>
FormT<K> det_form(const std::vector<std::vector<FormT<K>>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    char var = 'y';
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
        for (const auto& e : row) {
            if (e.degree() > 1) throw std::invalid_argument("det_form entries must have degree <= 1");
            if (!e.is_zero()) var = e.var();
        }
    }
    if (n > 25) throw std::invalid_argument("det_form: subset expansion infeasible for n > 25");

    // dp[S] = det of the |S| first rows restricted to column set S.
    const std::size_t full = std::size_t{1} << n;
    std::vector<FormT<K>> dp(full, FormT<K>::zero(var));
    dp[0] = FormT<K>::constant(K(1), var);
    // Iterating in increasing integer order visits subsets after their
    // subsets, so dp[S \ {c}] is always ready.
    for (std::size_t s = 1; s < full; ++s) {
        const int r = std::popcount(s) - 1;  // row being expanded
        FormT<K> acc(var);
        int pos = 0;
        bool first = true;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(s & (std::size_t{1} << c))) continue;
            const FormT<K>& entry = m[static_cast<std::size_t>(r)][c];
            if (!entry.is_zero()) {
                FormT<K> contrib = entry * dp[s ^ (std::size_t{1} << c)];
                if (((r + pos) & 1) != 0) contrib = -contrib;
                if (first && acc.is_zero()) acc = std::move(contrib);
                else acc += contrib;
                first = false;
            }
            ++pos;
        }
        dp[s] = std::move(acc);
    }
    return dp[full - 1];
}

template FormT<Rational> det_form(const std::vector<std::vector<FormT<Rational>>>&);
template FormT<GaussianRational> det_form(const std::vector<std::vector<FormT<GaussianRational>>>&);

TrivariateForm det_exact(const std::vector<std::vector<ComplexForm>>& m) {
    return real_form(det_form(m));
}

TrivariateForm det_exact(const std::vector<std::vector<TrivariateForm>>& m) {
    return det_form(m);
}

std::optional<TrivariateForm> form_divide(const TrivariateForm& a, const TrivariateForm& b) {
    if (b.is_zero()) throw std::invalid_argument("form division by zero form");
    if (a.is_zero()) return TrivariateForm::zero(a.var());
    if (a.degree() < b.degree()) return std::nullopt;
    TrivariateForm q(a.var());
    TrivariateForm r = a;
    const auto& [mb, cb] = b.leading();
    while (!r.is_zero()) {
        const auto& [mr, cr] = r.leading();
        // For homogeneous single-divisor division a term that fails the
        // divisibility test can never cancel later.
        if (mr.e0 < mb.e0 || mr.e1 < mb.e1 || mr.e2 < mb.e2) return std::nullopt;
        const Mono mq{mr.e0 - mb.e0, mr.e1 - mb.e1, mr.e2 - mb.e2};
        const Rational cq = cr / cb;
        q.add_term(mq, cq);
        r -= TrivariateForm::monomial(cq, mq, a.var()) * b;
    }
    return q;
}

NormalizedForm form_normalize(const TrivariateForm& f) {
    if (f.is_zero()) throw std::invalid_argument("normalize of zero form");
    BigInt den_lcm(1);
    for (const auto& [m, c] : f.terms()) {
        BigInt l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
    }
    BigInt content(0);
    for (const auto& [m, c] : f.terms()) {
        BigInt scaled = c.get_num() * (den_lcm / c.get_den());
        BigInt g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        content = g;
    }
    Rational scale = rat(content, den_lcm);
    if (sign(f.leading().second) < 0) scale = -scale;
    TrivariateForm prim(f.var());
    const Rational inv = 1 / scale;
    for (const auto& [m, c] : f.terms()) prim.add_term(m, c * inv);
    return {std::move(prim), std::move(scale)};
}

Rational UnivariatePoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return UnivariatePoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return UnivariatePoly(std::move(d));
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly operator*(const Rational& c, const UnivariatePoly& a) {
    if (c == 0) return UnivariatePoly();
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x *= c;
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::rem(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial remainder by zero");
    UnivariatePoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const Rational q = r.leading() / b.leading();
        const int shift = r.degree() - b.degree();
        std::vector<Rational> sub(static_cast<std::size_t>(shift) + b.c_.size(), Rational(0));
        for (std::size_t k = 0; k < b.c_.size(); ++k) sub[static_cast<std::size_t>(shift) + k] = q * b.c_[k];
        r = r - UnivariatePoly(std::move(sub));
    }
    return r;
}

UnivariatePoly UnivariatePoly::divexact(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.is_zero()) return UnivariatePoly();
    UnivariatePoly r = a;
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const Rational c = r.leading() / b.leading();
        const int shift = r.degree() - b.degree();
        q[static_cast<std::size_t>(shift)] = c;
        std::vector<Rational> sub(static_cast<std::size_t>(shift) + b.c_.size(), Rational(0));
        for (std::size_t k = 0; k < b.c_.size(); ++k) sub[static_cast<std::size_t>(shift) + k] = c * b.c_[k];
        r = r - UnivariatePoly(std::move(sub));
    }
    if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
    return UnivariatePoly(std::move(q));
}

UnivariatePoly UnivariatePoly::primitive_part() const {
    if (is_zero()) return *this;
    BigInt den_lcm(1);
    for (const auto& c : c_) {
        BigInt l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
    }
    BigInt content(0);
    for (const auto& c : c_) {
        BigInt scaled = c.get_num() * (den_lcm / c.get_den());
        BigInt g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        content = g;
    }
    // Positive scaling only: sign sequences must be preserved.
    const Rational s = rat(den_lcm, content);
    return s * (*this);
}

UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        UnivariatePoly r = UnivariatePoly::rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && sign(a.leading()) < 0) a = Rational(-1) * a;
    return a;
}

UnivariatePoly square_free_part(const UnivariatePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("square-free part of zero polynomial");
    if (f.degree() == 0) return UnivariatePoly::constant(Rational(1));
    const UnivariatePoly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) return f;
    return UnivariatePoly::divexact(f, g);
}

namespace {

int sign_at_pos_inf(const UnivariatePoly& p) { return sign(p.leading()); }
int sign_at_neg_inf(const UnivariatePoly& p) {
    return (p.degree() % 2 == 0) ? sign(p.leading()) : -sign(p.leading());
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

int sturm_real_root_count(const UnivariatePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("Sturm count of zero polynomial");
    UnivariatePoly g = square_free_part(f).primitive_part();
    if (g.degree() == 0) return 0;
    std::vector<UnivariatePoly> chain{g, g.derivative().primitive_part()};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UnivariatePoly r = UnivariatePoly::rem(chain[chain.size() - 2], chain.back());
        chain.push_back((Rational(-1) * r).primitive_part());
    }
    std::vector<int> at_neg, at_pos;
    for (const auto& p : chain) {
        if (p.is_zero()) break;
        at_neg.push_back(sign_at_neg_inf(p));
        at_pos.push_back(sign_at_pos_inf(p));
    }
    return variations(at_neg) - variations(at_pos);
}

UnivariatePoly restrict_to_line(const TrivariateForm& f, const std::array<Rational, 3>& base,
                                const std::array<Rational, 3>& dir) {
    if (dir[0] == 0 && dir[1] == 0 && dir[2] == 0)
        throw std::invalid_argument("restriction along the zero direction");
    const int d = f.degree();
    if (d < 0) return UnivariatePoly();
    // (base_v + t dir_v)^e for each variable, built incrementally.
    std::array<std::vector<UnivariatePoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].resize(static_cast<std::size_t>(d) + 1);
        pw[v][0] = UnivariatePoly::constant(Rational(1));
        const UnivariatePoly lin({base[static_cast<std::size_t>(v)], dir[static_cast<std::size_t>(v)]});
        for (int e = 1; e <= d; ++e) pw[v][e] = pw[v][e - 1] * lin;
    }
    UnivariatePoly acc;
    for (const auto& [m, c] : f.terms())
        acc = acc + c * (pw[0][m.e0] * pw[1][m.e1] * pw[2][m.e2]);
    return acc;
}

}  // namespace nrange
