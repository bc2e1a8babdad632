// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_PENCIL_HPP
#define NRANGE_PENCIL_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "nrange/eig.hpp"
#include "nrange/form.hpp"
#include "nrange/geometry.hpp"
#include "nrange/matrix.hpp"

namespace nrange {

// The Hermitian triple (A0 = I, A1, A2) of the Cartesian split
// A = A1 + i A2. Both parts exactly Hermitian by construction.
struct HermitianPencil {
    int n = 0;
    ExactComplexMatrix a1;
    ExactComplexMatrix a2;
};

HermitianPencil split(const ExactComplexMatrix& a);
ExactComplexMatrix reconstruct(const HermitianPencil& p);  // A1 + i A2

// Exact degree-n determinant form of y0 I + y1 A1 + y2 A2; p(1,0,0) = 1.
TrivariateForm pencil_form(const HermitianPencil& p);

// Floating pencil value I + y1 A1 + y2 A2.
ComplexMatrixF pencil_value(const HermitianPencil& p, double y1, double y2);

// Smallest eigenvalue of the pencil at an affine point; the membership
// verdict is lmi_min_eig >= -1e-10.
double lmi_min_eig(const HermitianPencil& p, double y1, double y2);

// Membership at an exact rational point. Generic points are decided in
// floating point; when the minimum eigenvalue sits within 1e-9 of zero the
// verdict falls back to an exact semidefiniteness test of the rational
// pencil value.
bool lmi_member(const HermitianPencil& p, const Rational& y1, const Rational& y2);

// Boundary crossing along the ray t * u, |u| = 1. Explicit sentinel for
// directions in which the pencil stays feasible forever.
struct RayHit {
    bool finite = false;
    double t = 0.0;
};
RayHit lmi_ray(const HermitianPencil& p, double u1, double u2);

struct LmiRay {
    double angle = 0.0;
    bool finite = false;
    double t = 0.0;        // hit distance when finite
    double y1 = 0.0;       // hit point when finite
    double y2 = 0.0;
    double min_eig = 0.0;  // pencil minimum eigenvalue at the hit; for
                           // unbounded rays the direction combination's
};

struct LmiBoundary {
    std::vector<LmiRay> rays;  // one per angle 2 pi j / m, in j order
    Polygon2D polygon;         // finite hits, angle order
};

// OpenMP kernel over rays; lmi_boundary_polygon_ref is the serial reference
// with identical per-ray arithmetic (results are bitwise equal).
LmiBoundary lmi_boundary_polygon(const HermitianPencil& p, int rays);
LmiBoundary lmi_boundary_polygon_ref(const HermitianPencil& p, int rays);

// Trials-based real-zero (hyperbolicity) test of a form at an interior
// point: every restriction to a random rational line through e must have as
// many distinct real roots as its square-free degree. The check can refute
// hyperbolicity with a witness; passing only reports that `trials` random
// directions found no violation.
struct HyperbolicityReport {
    bool hyperbolic = true;
    int trials = 0;
    int failed_trial = -1;
    std::array<Rational, 3> failing_direction{Rational(0), Rational(0), Rational(0)};
    int expected_roots = 0;  // square-free degree of the failing restriction
    int found_roots = 0;     // distinct real roots found there
};

HyperbolicityReport hyperbolicity_check(const TrivariateForm& f, const std::array<Rational, 3>& e,
                                        int trials, std::uint64_t seed = 20220901u);

}  // namespace nrange

#endif
