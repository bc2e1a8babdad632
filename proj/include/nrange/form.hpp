// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_FORM_HPP
#define NRANGE_FORM_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nrange/rational.hpp"

namespace nrange {

// Monomial y0^e0 y1^e1 y2^e2 (or x0,x1,x2 -- the variable letter lives on
// the form, not the monomial).
struct Mono {
    int e0 = 0, e1 = 0, e2 = 0;
    int deg() const { return e0 + e1 + e2; }
    friend bool operator==(const Mono& a, const Mono& b) {
        return a.e0 == b.e0 && a.e1 == b.e1 && a.e2 == b.e2;
    }
};

// Graded reverse lexicographic with y0 > y1 > y2; the one monomial order
// used everywhere (division, normalization, serialization).
// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int grevlex_cmp(const Mono& a, const Mono& b) {
    if (a.deg() != b.deg()) return a.deg() > b.deg() ? 1 : -1;
    if (a.e2 != b.e2) return a.e2 < b.e2 ? 1 : -1;
    if (a.e1 != b.e1) return a.e1 < b.e1 ? 1 : -1;
    return 0;
}

struct GrevlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return grevlex_cmp(a, b) > 0; }
};

// Homogeneous trivariate polynomial over an exact scalar field K
// (Rational for public forms, GaussianRational inside determinants).
// Invariants: no zero coefficients stored; all monomials share one total
// degree; iteration order is grevlex-descending.
template <class K>
class FormT {
  public:
    using TermMap = std::map<Mono, K, GrevlexGreater>;

    FormT() = default;
    explicit FormT(char var) : var_(var) {}

    static FormT zero(char var = 'y') { return FormT(var); }
    static FormT constant(const K& c, char var = 'y') {
        FormT f(var);
        f.add_term(Mono{0, 0, 0}, c);
        return f;
    }
    static FormT monomial(const K& c, const Mono& m, char var = 'y') {
        FormT f(var);
        f.add_term(m, c);
        return f;
    }
    // Degree-1 form in variable k (0,1,2).
    static FormT variable(int k, char var = 'y') {
        Mono m;
        (k == 0 ? m.e0 : k == 1 ? m.e1 : m.e2) = 1;
        return monomial(K(1), m, var);
    }

    char var() const { return var_; }
    FormT with_var(char v) const {
        FormT f = *this;
        f.var_ = v;
        return f;
    }

    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.deg(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const std::pair<const Mono, K>& leading() const {
        if (terms_.empty()) throw std::invalid_argument("leading term of zero form");
        return *terms_.begin();
    }

    void add_term(const Mono& m, const K& c) {
        if (c == K(0)) return;
        if (!terms_.empty() && m.deg() != degree())
            throw std::invalid_argument("mixed-degree term breaks homogeneity");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == K(0)) terms_.erase(it);
        }
    }

    FormT& operator+=(const FormT& g) {
        require_same_var(g);
        if (g.is_zero()) return *this;
        if (!is_zero() && degree() != g.degree())
            throw std::invalid_argument("sum of forms of different degree");
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }
    FormT& operator-=(const FormT& g) { return *this += -g; }

    friend FormT operator+(FormT a, const FormT& b) { return a += b; }
    friend FormT operator-(FormT a, const FormT& b) { return a -= b; }
    friend FormT operator-(const FormT& a) {
        FormT r(a.var_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend FormT operator*(const FormT& a, const FormT& b) {
        a.require_same_var(b);
        FormT r(a.var_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(Mono{ma.e0 + mb.e0, ma.e1 + mb.e1, ma.e2 + mb.e2}, ca * cb);
        return r;
    }
    friend FormT operator*(const K& c, const FormT& a) {
        FormT r(a.var_);
        if (c == K(0)) return r;
        for (const auto& [m, cc] : a.terms_) r.terms_.emplace(m, c * cc);
        return r;
    }
    FormT& operator*=(const FormT& g) { *this = *this * g; return *this; }

    friend bool operator==(const FormT& a, const FormT& b) {
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FormT& a, const FormT& b) { return !(a == b); }

    K eval(const std::array<K, 3>& p) const;

  private:
    void require_same_var(const FormT& g) const {
        if (!terms_.empty() && !g.terms_.empty() && var_ != g.var_)
            throw std::invalid_argument("mixing forms in different variables");
    }

    char var_ = 'y';
    TermMap terms_;
};

template <class K>
K FormT<K>::eval(const std::array<K, 3>& p) const {
    // Exact evaluation; powers built incrementally per variable.
    int d = degree();
    if (d < 0) return K(0);
    std::array<std::vector<K>, 3> pw;
    for (int v = 0; v < 3; ++v) {
        pw[v].resize(static_cast<std::size_t>(d) + 1);
        pw[v][0] = K(1);
        for (int e = 1; e <= d; ++e) pw[v][e] = pw[v][e - 1] * p[static_cast<std::size_t>(v)];
    }
    K acc(0);
    for (const auto& [m, c] : terms_) acc += c * pw[0][m.e0] * pw[1][m.e1] * pw[2][m.e2];
    return acc;
}

using TrivariateForm = FormT<Rational>;
using ComplexForm = FormT<GaussianRational>;

ComplexForm complexify(const TrivariateForm& f);
// Throws NumericError-style std::runtime_error if any imaginary part survives.
TrivariateForm real_form(const ComplexForm& f);

// Floating evaluation with compensated (Kahan) term summation.
double form_eval_double(const TrivariateForm& f, double x0, double x1, double x2);

// Exact determinant of a square matrix of degree<=1 forms via
// dynamic-programming Laplace expansion over column subsets.
template <class K>
FormT<K> det_form(const std::vector<std::vector<FormT<K>>>& m);

// Public entry point for Hermitian-pencil style matrices: complex
// coefficients in, real form out.
TrivariateForm det_exact(const std::vector<std::vector<ComplexForm>>& m);
TrivariateForm det_exact(const std::vector<std::vector<TrivariateForm>>& m);

// Exact division of homogeneous forms: returns a/b when b divides a,
// std::nullopt otherwise. Iterated leading-term elimination in grevlex.
std::optional<TrivariateForm> form_divide(const TrivariateForm& a, const TrivariateForm& b);

struct NormalizedForm {
    TrivariateForm primitive;  // integer coefficients, gcd 1, positive grevlex-leading coefficient
    Rational scale;            // primitive * scale == input
};
NormalizedForm form_normalize(const TrivariateForm& f);

// Univariate polynomial with exact rational coefficients, ascending degree.
class UnivariatePoly {
  public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UnivariatePoly zero() { return UnivariatePoly(); }
    static UnivariatePoly constant(const Rational& c) { return UnivariatePoly({c}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const {
        if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }

    Rational eval(const Rational& t) const;
    UnivariatePoly derivative() const;

    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const Rational& c, const UnivariatePoly& a);
    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.c_ == b.c_; }

    // Euclidean remainder a mod b; b nonzero.
    static UnivariatePoly rem(const UnivariatePoly& a, const UnivariatePoly& b);
    // Exact quotient; throws if b does not divide a.
    static UnivariatePoly divexact(const UnivariatePoly& a, const UnivariatePoly& b);

    // Scale by a positive rational so coefficients are integers with gcd 1.
    UnivariatePoly primitive_part() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b);
UnivariatePoly square_free_part(const UnivariatePoly& f);

// Number of distinct real roots via the Sturm chain of the square-free part.
int sturm_real_root_count(const UnivariatePoly& f);

// t -> f(base + t * dir), exact. dir must be nonzero.
UnivariatePoly restrict_to_line(const TrivariateForm& f, const std::array<Rational, 3>& base,
                                const std::array<Rational, 3>& dir);

}  // namespace nrange

#endif
