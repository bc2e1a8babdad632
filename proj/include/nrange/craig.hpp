// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_CRAIG_HPP
#define NRANGE_CRAIG_HPP

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nrange/curves.hpp"
#include "nrange/matrix.hpp"

namespace nrange {

// Exact test A1 * A2 == 0 for Hermitian A1, A2 of equal size.
bool product_zero(const ExactComplexMatrix& a1, const ExactComplexMatrix& a2);

// Exact coefficientwise comparison of det(I + y1 A1 + y2 A2) against
// det(I + y1 A1) * det(I + y2 A2) in the affine chart y0 = 1.
bool factorization_identity(const ExactComplexMatrix& a1, const ExactComplexMatrix& a2);

struct CraigReport {
    bool product_zero = false;
    bool factorization_holds = false;
    bool consistent = false;  // the two verdicts agree (they must)
    // Present when product_zero: simultaneous eigenvalue pairs (a1_k, a2_k),
    // each with a1_k * a2_k ~ 0.
    std::optional<std::vector<std::pair<double, double>>> joint_spectrum;
    double max_axis_product = 0.0;  // max |a1_k * a2_k| over the pairs
};

CraigReport craig_check(const ExactComplexMatrix& a1, const ExactComplexMatrix& a2);

// For a product-zero pair: the numerical-range hull of A1 + i A2 equals the
// hull of the joint-spectrum points within 1e-7 Hausdorff distance, and
// every joint-spectrum point lies on a coordinate axis.
bool axis_hull_check(const ExactComplexMatrix& a1, const ExactComplexMatrix& a2, int angles);

// Test-case generators. Exact unitaries come from the Cayley transform of a
// random Gaussian-rational skew-Hermitian matrix, so conjugation preserves
// the zero product in rational arithmetic.
ExactComplexMatrix random_skew_hermitian(int n, std::mt19937_64& rng);
ExactComplexMatrix random_hermitian_exact(int n, std::mt19937_64& rng);
ExactComplexMatrix cayley_unitary(const ExactComplexMatrix& skew);
// A1 = U* diag(B, 0) U, A2 = U* diag(0, C) U with Hermitian blocks of sizes
// k and n-k; A1 A2 = 0 exactly.
std::pair<ExactComplexMatrix, ExactComplexMatrix> random_product_zero_pair(int n, int k,
                                                                           std::mt19937_64& rng);

}  // namespace nrange

#endif
