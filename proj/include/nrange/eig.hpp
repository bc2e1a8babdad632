// SPDX-License-Identifier: Apache-2.0
#ifndef NRANGE_EIG_HPP
#define NRANGE_EIG_HPP

#include <complex>
#include <vector>

#include "nrange/matrix.hpp"

namespace nrange {

// Signals a numeric defect (non-convergence, residual blowup); expected
// never to fire on valid inputs.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending, stable original-index tiebreak
    ComplexMatrixF vectors;           // column k pairs with eigenvalue k, orthonormal
};

// Cyclic complex Jacobi rotations; terminates when the off-diagonal
// Frobenius mass drops below 1e-28 * |H|_F^2, capped at 60 sweeps.
// Requires max |H - H*| <= 1e-12 * (1 + max |H|).
EigenDecomposition hermitian_eig(const ComplexMatrixF& h);

inline double min_eigenvalue(const ComplexMatrixF& h) { return hermitian_eig(h).eigenvalues.front(); }
inline double max_eigenvalue(const ComplexMatrixF& h) { return hermitian_eig(h).eigenvalues.back(); }

// Exact test A*A == AA*.
bool is_normal(const ExactComplexMatrix& a);

// Eigenvalues of a normal matrix via the Cartesian split: diagonalize the
// Hermitian part, then the compression of the skew part to each eigenspace.
// Rejects non-normal input.
std::vector<std::complex<double>> normal_spectrum(const ExactComplexMatrix& a);

}  // namespace nrange

#endif
