// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_SVG_HPP
#define NRANGE_SVG_HPP

#include <complex>
#include <string>
#include <vector>

#include "nrange/curves.hpp"
#include "nrange/geometry.hpp"
#include "nrange/pencil.hpp"

namespace nrange {

// Figure styling: gray filled region, black curve, marked vertices.
// Deterministic output for fixed inputs; y axis flipped to mathematical
// orientation; viewport is the drawn bounding box plus a margin fraction.
struct RenderSpec {
    int width = 800;
    int height = 800;
    double margin = 0.05;  // fraction of the bounding box, in [0, 0.5]
    bool show_region = true;
    bool show_curve = true;
    bool show_hull = true;
    bool show_vertices = true;
    bool show_spectrum = true;
};

// Numerical range figure: curve branches, hull region, optional vertex and
// spectrum markers.
std::string render_range_svg(const std::vector<CurveSample>& samples, int branches,
                             const Polygon2D& hull, const std::vector<P2>& vertices,
                             const std::vector<std::complex<double>>& spectrum,
                             const RenderSpec& spec);

// LMI set figure: finite boundary polygon as region plus boundary line.
std::string render_lmi_svg(const LmiBoundary& boundary, const RenderSpec& spec);

}  // namespace nrange

#endif
