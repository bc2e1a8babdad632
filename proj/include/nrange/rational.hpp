// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_RATIONAL_HPP
#define NRANGE_RATIONAL_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nrange {

// Exact rational scalar. GMP keeps values canonical (gcd(|num|,den)=1,
// den>=1) as long as every value is canonicalized on construction; the
// helpers below do that, arithmetic preserves it.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/d" with optional leading sign. Throws std::invalid_argument.
Rational rat_from_string(const std::string& text);

std::string rat_to_string(const Rational& q);

inline double rat_to_double(const Rational& q) { return q.get_d(); }

inline int sign(const Rational& q) { return sgn(q); }

Rational rat_pow(const Rational& base, unsigned exp);

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r, long i = 0) : re(rat(r)), im(rat(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const Rational& c, const GaussianRational& a) {
        return {c * a.re, c * a.im};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero GaussianRational");
        const Rational n = b.norm2();
        GaussianRational num = a * b.conj();
        return {num.re / n, num.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { re += b.re; im += b.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& b) { re -= b.re; im -= b.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

std::string gauss_to_string(const GaussianRational& z);

}  // namespace nrange

#endif
