// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_CURVES_HPP
#define NRANGE_CURVES_HPP

#include <vector>

#include "nrange/geometry.hpp"
#include "nrange/pencil.hpp"

namespace nrange {

// One swept point of the boundary generating curve: eigenvalue branch k of
// H(theta) = cos(theta) A1 + sin(theta) A2 at sample angle theta, with the
// planar point (w* A1 w, w* A2 w) of the branch eigenvector. Tangency
// x1 cos(theta) + x2 sin(theta) = lambda holds by construction.
struct CurveSample {
    double theta = 0.0;
    int branch = 0;  // 1..n, ascending eigenvalue order
    double lambda = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
};

// Full sweep: m angles, n branches each, assembled in (angle, branch) order.
// OpenMP kernel; sweep_ref is the serial reference with identical per-angle
// arithmetic (bitwise-equal results).
std::vector<CurveSample> sweep(const HermitianPencil& p, int angles);
std::vector<CurveSample> sweep_ref(const HermitianPencil& p, int angles);
// Sweep over an explicit angle list (shifted grids, refinement studies).
std::vector<CurveSample> sweep_at_angles(const HermitianPencil& p,
                                         const std::vector<double>& angles);

// h(theta) = lambda_max(cos(theta) A1 + sin(theta) A2).
double support_function(const HermitianPencil& p, double theta);

struct HullResult {
    Polygon2D polygon;
    bool degenerate = false;  // point or segment
};

// Convex hull (monotone chain) of the top-branch sweep points.
HullResult numerical_range_hull(const HermitianPencil& p, int angles);

// Second mixed compound [A,B] over lexicographically ordered index pairs;
// N = n(n-1)/2, [A,B] = [B,A] exactly.
struct CompoundMatrix {
    int n = 0;  // source dimension
    ExactComplexMatrix entries;  // N x N
};
CompoundMatrix second_mixed_compound(const ExactComplexMatrix& a, const ExactComplexMatrix& b);

// Exact determinant of the bordered 4N x 4N compound matrix; homogeneous of
// degree 2N in x. The dual curve polynomial divides it (cofactors from
// singular primal curves are reported by the caller, never dropped).
// Computed by exact bivariate interpolation of the dehomogenized determinant
// on an integer grid; the grid rows are an OpenMP kernel, the _ref variant
// is the serial reference.
TrivariateForm fiedler_dual_form(const ExactComplexMatrix& a);
TrivariateForm fiedler_dual_form_ref(const ExactComplexMatrix& a);

// max over samples of |q(1,x1,x2)| / (sum|coeff| * max(1, |x|_inf)^deg).
double dual_residual(const TrivariateForm& q, const std::vector<CurveSample>& samples);
// Union curve: per-sample minimum over the component forms.
double dual_residual(const std::vector<TrivariateForm>& components,
                     const std::vector<CurveSample>& samples);

// Affine projection (<A1,W>/<A0,W>, <A2,W>/<A0,W>) of a PSD matrix W.
P2 psd_projection_point(const HermitianPencil& p, const ComplexMatrixF& w);

// Primal/dual pairing diagnostics over hull vertices x and finite LMI
// boundary points y: global_min = min <x,y> (>= 0 up to numerics),
// worst_tightness = max over y of min over x (== 0 up to numerics: every
// boundary point supports the hull).
struct DualityGap {
    double global_min = 0.0;
    double worst_tightness = 0.0;
};
DualityGap duality_gap(const HermitianPencil& p, int angles);

}  // namespace nrange

#endif
