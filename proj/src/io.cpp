// SPDX-License-Identifier: Apache-2.0
#include "nrange/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nrange {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses "a" or "a/b" starting at pos; advances pos. No sign handling here.
Rational parse_unsigned_rational(const std::string& s, std::size_t& pos, int line, int col) {
    const std::size_t start = pos;
    while (pos < s.size() && is_digit(s[pos])) ++pos;
    if (pos == start) throw ParseError(line, col, "expected digits in entry '" + s + "'");
    BigInt num(s.substr(start, pos - start));
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        const std::size_t dstart = pos;
        while (pos < s.size() && is_digit(s[pos])) ++pos;
        if (pos == dstart) throw ParseError(line, col, "expected denominator in entry '" + s + "'");
        BigInt den(s.substr(dstart, pos - dstart));
        if (den == 0) throw ParseError(line, col, "zero denominator in entry '" + s + "'");
        return rat(num, den);
    }
    return Rational(num);
}

GaussianRational parse_entry_at(const std::string& token, int line, int col) {
    if (token.empty()) throw ParseError(line, col, "empty entry");
    std::size_t pos = 0;
    int sign1 = 1;
    if (token[pos] == '+' || token[pos] == '-') {
        if (token[pos] == '-') sign1 = -1;
        ++pos;
    }
    if (pos >= token.size()) throw ParseError(line, col, "dangling sign in entry '" + token + "'");

    // Pure imaginary unit: "i" / "-i" / "+i".
    if (token[pos] == 'i') {
        if (pos + 1 != token.size())
            throw ParseError(line, col, "trailing characters in entry '" + token + "'");
        return {rat(0), rat(sign1)};
    }

    Rational first = parse_unsigned_rational(token, pos, line, col);
    if (pos == token.size()) return {rat(sign1) * first, rat(0)};
    if (token[pos] == 'i') {
        if (pos + 1 != token.size())
            throw ParseError(line, col, "trailing characters in entry '" + token + "'");
        return {rat(0), rat(sign1) * first};  // pure imaginary "ci"
    }
    if (token[pos] != '+' && token[pos] != '-')
        throw ParseError(line, col, "malformed entry '" + token + "'");
    const int sign2 = token[pos] == '-' ? -1 : 1;
    ++pos;
    if (pos >= token.size()) throw ParseError(line, col, "dangling sign in entry '" + token + "'");
    Rational second;
    if (token[pos] == 'i') {
        second = rat(1);
        ++pos;
    } else {
        second = parse_unsigned_rational(token, pos, line, col);
        if (pos >= token.size() || token[pos] != 'i')
            throw ParseError(line, col, "imaginary part must end in 'i' in entry '" + token + "'");
        ++pos;
    }
    if (pos != token.size()) throw ParseError(line, col, "trailing characters in entry '" + token + "'");
    return {rat(sign1) * first, rat(sign2) * second};
}

}  // namespace

GaussianRational parse_complex_entry(const std::string& token) { return parse_entry_at(token, 0, 0); }

ExactComplexMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    // Dimension line.
    int n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        try {
            const long v = std::stol(tok);
            if (v < 1 || v > 64) throw std::out_of_range("range");
            n = static_cast<int>(v);
        } catch (const std::exception&) {
            throw ParseError(lineno, 1, "expected matrix dimension, got '" + tok + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, 1, "unexpected token after dimension: '" + extra + "'");
        break;
    }
    if (n < 0) throw ParseError(lineno + 1, 1, "missing matrix dimension");

    ExactComplexMatrix m(n);
    int row = 0;
    while (row < n && std::getline(in, line)) {
        ++lineno;
        // Tokenize with column positions.
        std::vector<std::pair<std::string, int>> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i >= line.size()) break;
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            toks.emplace_back(line.substr(start, i - start), static_cast<int>(start) + 1);
        }
        if (toks.empty()) continue;  // blank line
        if (static_cast<int>(toks.size()) != n)
            throw ParseError(lineno, toks.back().second,
                             "expected " + std::to_string(n) + " entries in row, got " +
                                 std::to_string(toks.size()));
        for (int c = 0; c < n; ++c)
            m(row, c) = parse_entry_at(toks[static_cast<std::size_t>(c)].first, lineno,
                                       toks[static_cast<std::size_t>(c)].second);
        ++row;
    }
    if (row != n) throw ParseError(lineno + 1, 1, "matrix ended after " + std::to_string(row) +
                                                      " of " + std::to_string(n) + " rows");
    return m;
}

ExactComplexMatrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

std::string serialize_matrix(const ExactComplexMatrix& m) {
    std::ostringstream out;
    out << m.n() << "\n";
    for (int r = 0; r < m.n(); ++r) {
        for (int c = 0; c < m.n(); ++c) {
            if (c) out << ' ';
            out << gauss_to_string(m(r, c));
        }
        out << "\n";
    }
    return out.str();
}

std::string serialize_form(const TrivariateForm& f) {
    const NormalizedForm nf = form_normalize(f);
    std::ostringstream out;
    out << "form vars=" << f.var() << " degree=" << f.degree() << " scale="
        << nf.scale.get_num().get_str() << "/" << nf.scale.get_den().get_str() << "\n";
    for (const auto& [m, c] : nf.primitive.terms())
        out << c.get_num().get_str() << " " << m.e0 << " " << m.e1 << " " << m.e2 << "\n";
    return out.str();
}

TrivariateForm parse_form(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, 1, "empty polynomial file");
    char var = 0;
    int degree = -1;
    std::string scale_str;
    {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word != "form") throw ParseError(1, 1, "polynomial file must start with 'form'");
        while (ls >> word) {
            const auto eq = word.find('=');
            if (eq == std::string::npos) throw ParseError(1, 1, "malformed header field '" + word + "'");
            const std::string key = word.substr(0, eq), val = word.substr(eq + 1);
            if (key == "vars") {
                if (val != "y" && val != "x") throw ParseError(1, 1, "vars must be 'y' or 'x'");
                var = val[0];
            } else if (key == "degree") {
                degree = std::stoi(val);
            } else if (key == "scale") {
                scale_str = val;
            } else {
                throw ParseError(1, 1, "unknown header field '" + key + "'");
            }
        }
    }
    if (var == 0 || degree < 0 || scale_str.empty())
        throw ParseError(1, 1, "header must carry vars, degree and scale");
    Rational scale;
    try {
        scale = rat_from_string(scale_str);
    } catch (const std::exception& e) {
        throw ParseError(1, 1, std::string("bad scale: ") + e.what());
    }
    if (scale == 0) throw ParseError(1, 1, "scale must be nonzero");

    TrivariateForm f(var);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string coeff_tok;
        if (!(ls >> coeff_tok)) continue;
        int e0, e1, e2;
        if (!(ls >> e0 >> e1 >> e2)) throw ParseError(lineno, 1, "term needs coefficient and three exponents");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, 1, "unexpected token '" + extra + "'");
        BigInt c;
        try {
            c = BigInt(coeff_tok);
        } catch (const std::exception&) {
            throw ParseError(lineno, 1, "bad integer coefficient '" + coeff_tok + "'");
        }
        if (c == 0) throw ParseError(lineno, 1, "zero coefficient stored in file");
        if (e0 < 0 || e1 < 0 || e2 < 0 || e0 + e1 + e2 != degree)
            throw ParseError(lineno, 1, "exponents do not sum to the header degree");
        f.add_term(Mono{e0, e1, e2}, Rational(c) * scale);
    }
    if (f.is_zero()) throw ParseError(lineno, 1, "polynomial file carries no terms");
    return f;
}

TrivariateForm load_form(const std::string& path) { return parse_form(read_file(path)); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string samples_csv(const std::vector<CurveSample>& samples) {
    std::ostringstream out;
    out << "theta,branch,lambda,x1,x2\n";
    for (const auto& s : samples)
        out << fmt17(s.theta) << ',' << s.branch << ',' << fmt17(s.lambda) << ',' << fmt17(s.x1)
            << ',' << fmt17(s.x2) << "\n";
    return out.str();
}

std::string rays_csv(const std::vector<LmiRay>& rays) {
    std::ostringstream out;
    out << "angle,t,y1,y2,min_eig\n";
    for (const auto& r : rays) {
        if (r.finite)
            out << fmt17(r.angle) << ',' << fmt17(r.t) << ',' << fmt17(r.y1) << ',' << fmt17(r.y2)
                << ',' << fmt17(r.min_eig) << "\n";
        else
            out << fmt17(r.angle) << ",,,," << fmt17(r.min_eig) << "\n";
    }
    return out.str();
}

std::string hull_csv(const Polygon2D& poly) {
    std::ostringstream out;
    out << "x1,x2\n";
    for (const auto& v : poly.vertices) out << fmt17(v.x) << ',' << fmt17(v.y) << "\n";
    return out.str();
}

}  // namespace nrange
