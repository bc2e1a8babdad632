// SPDX-License-Identifier: Apache-2.0
#include "nrange/rational.hpp"

namespace nrange {

Rational rat_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    // mpq_class accepts "n" and "n/d" but neither validates junk strictly
    // nor canonicalizes, so check the shape ourselves.
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw std::invalid_argument("bad rational literal: " + text);
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("bad rational literal: " + text);
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in literal: " + text);
    return rat(BigInt(num), d);
}

std::string rat_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rat_pow(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

std::string gauss_to_string(const GaussianRational& z) {
    if (z.im == 0) return rat_to_string(z.re);
    std::string im_mag = rat_to_string(abs(z.im));
    std::string im_part = (im_mag == "1") ? "i" : im_mag + "i";
    if (z.re == 0) return (sign(z.im) < 0 ? "-" : "") + im_part;
    return rat_to_string(z.re) + (sign(z.im) < 0 ? "-" : "+") + im_part;
}

}  // namespace nrange
