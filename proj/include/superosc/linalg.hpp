#pragma once

#include "superosc/sym_matrix.hpp"

namespace superosc {

// Lower-triangular Cholesky factor L with S = L L^T.
struct CholeskyFactor {
    XMat lower;
    long bits;

    XVec solve(const XVec& b) const;
    XCVec solve(const XCVec& b) const;  // real factor, complex rhs
};

// Throws PrecisionError on a non-positive pivot.
CholeskyFactor cholesky_factor(const SymMatrix& s);

XVec cholesky_solve(const SymMatrix& s, const XVec& b);

// Cheap two-sided condition estimate from the Cholesky diagonal:
// cond(S) >= (max L_ii / min L_ii)^2 and usually close for these kernels.
XReal spd_condition_estimate(const CholeskyFactor& f);

// v^dagger S v, forward product. Real nonnegative for real symmetric S;
// the imaginary residue is checked against the positive-sum rounding scale
// and discarded.
XReal quadratic_form(const SymMatrix& s, const XCVec& v);

struct SymEigen {
    XVec values;   // ascending
    XMat vectors;  // orthonormal columns, vectors.col(i) pairs with values[i]
};

// Cyclic Jacobi rotations, run until the off-diagonal Frobenius mass drops
// below n^2 * eps * ||S||_F. Jacobi keeps full relative accuracy for the
// tiny eigenvalues of SPD matrices, which is what the prolate spectrum
// needs.
SymEigen sym_eigen(const SymMatrix& s);

}  // namespace superosc
