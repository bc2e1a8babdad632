// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_IO_HPP
#define NRANGE_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nrange/curves.hpp"
#include "nrange/form.hpp"
#include "nrange/matrix.hpp"
#include "nrange/pencil.hpp"

namespace nrange {

struct ParseError : std::runtime_error {
    int line = 0;
    int col = 0;
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + what_),
          line(line_),
          col(col_) {}
};

// Matrix file: first line is n, then n rows of whitespace-separated exact
// complex-rational entries ("3", "-1/2", "1+2i", "-i", "3/4i", ...).
ExactComplexMatrix parse_matrix(const std::string& text);
ExactComplexMatrix load_matrix(const std::string& path);
std::string serialize_matrix(const ExactComplexMatrix& m);

// Single complex entry in the matrix-file grammar.
GaussianRational parse_complex_entry(const std::string& token);

// Polynomial file: header `form vars=<y|x> degree=<d> scale=<num>/<den>`,
// then one `<int-coeff> <e0> <e1> <e2>` line per term, grevlex-descending.
std::string serialize_form(const TrivariateForm& f);
TrivariateForm parse_form(const std::string& text);
TrivariateForm load_form(const std::string& path);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// CSV emission; doubles at 17 significant digits (round-trip exact).
std::string samples_csv(const std::vector<CurveSample>& samples);
std::string rays_csv(const std::vector<LmiRay>& rays);
std::string hull_csv(const Polygon2D& poly);

std::string fmt17(double v);

}  // namespace nrange

#endif
