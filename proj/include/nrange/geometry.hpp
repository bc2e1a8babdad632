// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_GEOMETRY_HPP
#define NRANGE_GEOMETRY_HPP

#include <vector>

namespace nrange {

struct P2 {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }
};

inline double cross(const P2& o, const P2& a, const P2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist(const P2& a, const P2& b);
double point_segment_distance(const P2& p, const P2& a, const P2& b);

// Ordered convex polygon, counterclockwise. Fewer than three vertices is a
// legitimate degenerate hull (point or segment), flagged, never an error.
struct Polygon2D {
    std::vector<P2> vertices;
    bool degenerate() const { return vertices.size() < 3; }
};

// Andrew monotone chain; collinear interior points dropped (tolerance scaled
// to the squared data magnitude). At least one input point required.
Polygon2D convex_hull(std::vector<P2> points);

// Signed membership margin: >= 0 inside (distance to the nearest edge),
// < 0 outside (negated distance to the polygon). Degenerate polygons give
// the negated distance to the point/segment.
double membership_margin(const Polygon2D& poly, const P2& p);

inline bool polygon_contains(const Polygon2D& poly, const P2& p, double tol) {
    return membership_margin(poly, p) >= -tol;
}

// Hausdorff distance between two convex polygons (as filled regions).
double hausdorff_distance(const Polygon2D& a, const Polygon2D& b);

// Minimal vertex representation: collapses clusters of nearly coincident
// consecutive vertices, then keeps only corners whose adjacent edges turn by
// more than `tol` (sine of the turn angle, cross-product test).
std::vector<P2> polytope_vertices(const Polygon2D& poly, double tol);

}  // namespace nrange

#endif
