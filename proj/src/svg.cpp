// SPDX-License-Identifier: Apache-2.0
#include "nrange/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nrange {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

struct Box {
    double lox = 0, loy = 0, hix = 0, hiy = 0;
    bool empty = true;
    void add(double x, double y) {
        if (empty) {
            lox = hix = x;
            loy = hiy = y;
            empty = false;
        } else {
            lox = std::min(lox, x);
            hix = std::max(hix, x);
            loy = std::min(loy, y);
            hiy = std::max(hiy, y);
        }
    }
};

class SvgDoc {
  public:
    SvgDoc(const Box& box, const RenderSpec& spec) {
        if (spec.margin < 0.0 || spec.margin > 0.5)
            throw std::invalid_argument("render margin fraction must lie in [0, 0.5]");
        double w = box.hix - box.lox, h = box.hiy - box.loy;
        if (w <= 0) w = 1.0;
        if (h <= 0) h = 1.0;
        const double mx = spec.margin * w, my = spec.margin * h;
        // y flip: drawing coordinates are (x, -y).
        lox_ = box.lox - mx;
        loy_ = -(box.hiy + my);
        w_ = w + 2 * mx;
        h_ = h + 2 * my;
        marker_ = 0.008 * std::max(w_, h_);
        head_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
                "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"" + num(lox_) + " " +
                num(loy_) + " " + num(w_) + " " + num(h_) + "\">\n";
        stroke_ = 0.0025 * std::max(w_, h_);
    }

    void polygon(const std::vector<P2>& pts, const std::string& fill, const std::string& stroke,
                 bool dashed = false) {
        if (pts.size() < 2) return;
        body_ << "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << ' ';
            body_ << num(pts[i].x) << ',' << num(-pts[i].y);
        }
        body_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
              << num(stroke_) << "\"";
        if (dashed) body_ << " stroke-dasharray=\"" << num(4 * stroke_) << "\"";
        body_ << "/>\n";
    }

    void path(const std::vector<P2>& pts, const std::string& stroke) {
        if (pts.size() < 2) return;
        body_ << "<path d=\"M " << num(pts[0].x) << ' ' << num(-pts[0].y);
        for (std::size_t i = 1; i < pts.size(); ++i)
            body_ << " L " << num(pts[i].x) << ' ' << num(-pts[i].y);
        body_ << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << num(stroke_)
              << "\"/>\n";
    }

    void circle(const P2& p, const std::string& fill) {
        body_ << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\""
              << num(marker_) << "\" fill=\"" << fill << "\"/>\n";
    }

    std::string str() const { return head_ + body_.str() + "</svg>\n"; }

  private:
    std::string head_;
    std::ostringstream body_;
    double lox_, loy_, w_, h_, marker_, stroke_;
};

}  // namespace

std::string render_range_svg(const std::vector<CurveSample>& samples, int branches,
                             const Polygon2D& hull, const std::vector<P2>& vertices,
                             const std::vector<std::complex<double>>& spectrum,
                             const RenderSpec& spec) {
    Box box;
    for (const auto& s : samples) box.add(s.x1, s.x2);
    for (const auto& v : hull.vertices) box.add(v.x, v.y);
    for (const auto& z : spectrum) box.add(z.real(), z.imag());
    if (box.empty) box.add(0, 0);
    SvgDoc doc(box, spec);

    if (spec.show_region && hull.vertices.size() >= 3)
        doc.polygon(hull.vertices, "#d8d8d8", "none");
    if (spec.show_curve && branches > 0) {
        const int m = static_cast<int>(samples.size()) / branches;
        for (int k = 0; k < branches; ++k) {
            std::vector<P2> pts;
            pts.reserve(static_cast<std::size_t>(m) + 1);
            for (int j = 0; j < m; ++j) {
                const CurveSample& s = samples[static_cast<std::size_t>(j) * branches + k];
                pts.push_back({s.x1, s.x2});
            }
            if (!pts.empty()) pts.push_back(pts.front());
            doc.path(pts, "#000000");
        }
    }
    if (spec.show_hull && hull.vertices.size() >= 2)
        doc.polygon(hull.vertices, "none", "#404040", true);
    if (spec.show_vertices)
        for (const auto& v : vertices) doc.circle(v, "#000000");
    if (spec.show_spectrum)
        for (const auto& z : spectrum) doc.circle({z.real(), z.imag()}, "#808080");
    return doc.str();
}

std::string render_lmi_svg(const LmiBoundary& boundary, const RenderSpec& spec) {
    Box box;
    box.add(0, 0);  // the origin is always feasible
    for (const auto& v : boundary.polygon.vertices) box.add(v.x, v.y);
    SvgDoc doc(box, spec);
    if (spec.show_region && boundary.polygon.vertices.size() >= 3)
        doc.polygon(boundary.polygon.vertices, "#d8d8d8", "none");
    if (spec.show_curve && boundary.polygon.vertices.size() >= 2) {
        std::vector<P2> pts = boundary.polygon.vertices;
        // Close the outline only when every ray is finite.
        bool all_finite = true;
        for (const auto& r : boundary.rays) all_finite = all_finite && r.finite;
        if (all_finite && !pts.empty()) pts.push_back(pts.front());
        doc.path(pts, "#000000");
    }
    doc.circle({0, 0}, "#404040");
    return doc.str();
}

}  // namespace nrange
