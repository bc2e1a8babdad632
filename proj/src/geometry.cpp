// SPDX-License-Identifier: Apache-2.0
#include "nrange/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nrange {

double dist(const P2& a, const P2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double point_segment_distance(const P2& p, const P2& a, const P2& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return dist(p, a);
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

Polygon2D convex_hull(std::vector<P2> points) {
    if (points.empty()) throw std::invalid_argument("convex hull of empty point set");
    double scale = 1.0;
    for (const auto& p : points) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const double eps = 1e-12 * scale * scale;
    const double atol = 1e-12 * scale;

    std::sort(points.begin(), points.end(), [](const P2& a, const P2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    points.erase(std::unique(points.begin(), points.end(),
                             [&](const P2& a, const P2& b) { return dist(a, b) <= atol; }),
                 points.end());

    Polygon2D poly;
    if (points.size() <= 2) {
        poly.vertices = std::move(points);
        return poly;
    }
    std::vector<P2>& h = poly.vertices;
    h.resize(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {  // lower chain
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= eps) --k;
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {  // upper chain
        while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= eps) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    return poly;
}

double membership_margin(const Polygon2D& poly, const P2& p) {
    const auto& v = poly.vertices;
    if (v.empty()) throw std::invalid_argument("membership in empty polygon");
    if (v.size() == 1) return -dist(p, v[0]);
    if (v.size() == 2) return -point_segment_distance(p, v[0], v[1]);
    double margin = std::numeric_limits<double>::infinity();
    bool inside = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const P2& a = v[i];
        const P2& b = v[(i + 1) % v.size()];
        const double len = dist(a, b);
        if (len == 0.0) continue;
        const double d = cross(a, b, p) / len;  // signed: >0 strictly inside for CCW
        margin = std::min(margin, d);
        if (d < 0.0) inside = false;
    }
    if (inside) return margin;
    double outdist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i)
        outdist = std::min(outdist, point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
    return -outdist;
}

double hausdorff_distance(const Polygon2D& a, const Polygon2D& b) {
    double h = 0.0;
    for (const auto& p : a.vertices) h = std::max(h, std::max(0.0, -membership_margin(b, p)));
    for (const auto& p : b.vertices) h = std::max(h, std::max(0.0, -membership_margin(a, p)));
    return h;
}

std::vector<P2> polytope_vertices(const Polygon2D& poly, double tol) {
    std::vector<P2> v = poly.vertices;
    if (v.size() <= 2) return v;

    double lox = v[0].x, hix = v[0].x, loy = v[0].y, hiy = v[0].y;
    for (const auto& p : v) {
        lox = std::min(lox, p.x); hix = std::max(hix, p.x);
        loy = std::min(loy, p.y); hiy = std::max(hiy, p.y);
    }
    const double diag = std::hypot(hix - lox, hiy - loy);

    // Collapse clusters of nearly coincident consecutive vertices first so a
    // micro-edge cannot masquerade as two corners.
    const double dmerge = 1e-9 * std::max(diag, 1e-300);
    std::vector<P2> merged;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        double sx = v[i].x, sy = v[i].y;
        while (j + 1 < v.size() && dist(v[j], v[j + 1]) <= dmerge) {
            ++j;
            sx += v[j].x;
            sy += v[j].y;
        }
        const double cnt = static_cast<double>(j - i + 1);
        merged.push_back({sx / cnt, sy / cnt});
        i = j + 1;
    }
    if (merged.size() >= 2 && dist(merged.front(), merged.back()) <= dmerge) {
        merged.front() = {0.5 * (merged.front().x + merged.back().x),
                          0.5 * (merged.front().y + merged.back().y)};
        merged.pop_back();
    }
    if (merged.size() <= 2) return merged;

    std::vector<P2> out;
    const std::size_t m = merged.size();
    for (std::size_t k = 0; k < m; ++k) {
        const P2& prev = merged[(k + m - 1) % m];
        const P2& cur = merged[k];
        const P2& next = merged[(k + 1) % m];
        const double la = dist(prev, cur), lb = dist(cur, next);
        if (la == 0.0 || lb == 0.0) continue;
        const double sine = std::abs(cross(prev, cur, next)) / (la * lb);
        if (sine > tol) out.push_back(cur);
    }
    if (out.empty()) {  // fully collinear ring: keep the two extremes
        auto mm = std::minmax_element(merged.begin(), merged.end(), [](const P2& a, const P2& b) {
            return a.x != b.x ? a.x < b.x : a.y < b.y;
        });
        return {*mm.first, *mm.second};
    }
    return out;
}

}  // namespace nrange
