#pragma once

// Test-only reference routes, deliberately independent of the library
// kernels they check: Gaussian elimination instead of Cholesky, Sylvester
// inertia bisection instead of Jacobi.

#include <cstdint>

#include "superosc/sym_matrix.hpp"

namespace superosc::oracle {

// Partial-pivot Gaussian elimination.
inline XVec gauss_solve(XMat a, XVec b) {
    const Index n = a.rows();
    for (Index col = 0; col < n; ++col) {
        Index piv = col;
        for (Index r = col + 1; r < n; ++r)
            if (abs(a(r, col)) > abs(a(piv, col))) piv = r;
        if (piv != col) {
            for (Index c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
            std::swap(b[col], b[piv]);
        }
        for (Index r = col + 1; r < n; ++r) {
            const XReal f = a(r, col) / a(col, col);
            for (Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    XVec x(n);
    for (Index i = n - 1; i >= 0; --i) {
        XReal v = b[i];
        for (Index c = i + 1; c < n; ++c) v -= a(i, c) * x[c];
        x[i] = v / a(i, i);
    }
    return x;
}

// Eigenvalues of (A - t I) below zero, counted through LDL^T pivot signs.
inline long count_eigenvalues_below(const XMat& a0, const XReal& t) {
    XMat a = a0;
    const Index n = a.rows();
    for (Index i = 0; i < n; ++i) a(i, i) -= t;
    long neg = 0;
    for (Index j = 0; j < n; ++j) {
        const XReal d = a(j, j);
        if (d < XReal(0)) ++neg;
        if (d.is_zero()) return neg;  // t is an eigenvalue; caller brackets around it
        for (Index i = j + 1; i < n; ++i) {
            const XReal f = a(i, j) / d;
            for (Index c = j; c < n; ++c) a(i, c) -= f * a(j, c);
        }
    }
    return neg;
}

// k-th smallest eigenvalue (k = 1 is the smallest) by inertia bisection.
inline XReal kth_eigenvalue_bisect(const SymMatrix& s, long k, long iters = 0) {
    const XMat a = s.dense();
    const long bits = s.bits();
    if (iters == 0) iters = bits + 16;
    XReal hi = s.norm_inf() + XReal(1);
    XReal lo = -hi;
    for (long it = 0; it < iters; ++it) {
        const XReal mid = (lo + hi) / XReal(2);
        if (count_eigenvalues_below(a, mid) >= k)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / XReal(2);
}

inline XReal smallest_eigenvalue_bisect(const SymMatrix& s) {
    return kth_eigenvalue_bisect(s, 1);
}

inline XReal largest_eigenvalue_bisect(const SymMatrix& s) {
    return kth_eigenvalue_bisect(s, s.size());
}

// Deterministic xorshift64*; uniform in [lo, hi) with 53 effective bits.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    XReal uniform(const XReal& lo, const XReal& hi, long bits) {
        return lo + (hi - lo) * XReal::from_double(uniform(), bits);
    }
};

}  // namespace superosc::oracle
