#pragma once

#include <vector>

#include "superosc/eigen_support.hpp"
#include "superosc/errors.hpp"

namespace superosc {

// Dense symmetric matrix with single-triangle storage: entry (i,j) and
// (j,i) are the same object, so symmetry holds by construction.
class SymMatrix {
public:
    SymMatrix(Index n, long bits) : n_(n), bits_(bits) {
        if (n < 1) throw DomainError("SymMatrix: dimension must be >= 1");
        tri_.assign(static_cast<size_t>(n * (n + 1) / 2), XReal::zero(bits));
    }

    Index size() const { return n_; }
    long bits() const { return bits_; }

    const XReal& operator()(Index i, Index j) const { return tri_[idx(i, j)]; }
    // Entries live at the matrix's working precision regardless of how the
    // supplied value was built.
    void set(Index i, Index j, const XReal& v) { tri_[idx(i, j)] = v.to_bits(bits_); }

    XMat dense() const {
        XMat m(n_, n_);
        for (Index i = 0; i < n_; ++i)
            for (Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = (*this)(i, j);
        return m;
    }

    // max_i sum_j |S_ij|
    XReal norm_inf() const {
        XReal best = XReal::zero(bits_);
        for (Index i = 0; i < n_; ++i) {
            XReal row = XReal::zero(bits_);
            for (Index j = 0; j < n_; ++j) row += abs((*this)(i, j));
            best = max(best, row);
        }
        return best;
    }

    XReal norm_frobenius() const {
        XReal s = XReal::zero(bits_);
        for (Index i = 0; i < n_; ++i)
            for (Index j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
        return sqrt(s);
    }

    // S * v
    XVec apply(const XVec& v) const {
        XVec out(n_);
        for (Index i = 0; i < n_; ++i) {
            XReal s = XReal::zero(bits_);
            for (Index j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
            out[i] = std::move(s);
        }
        return out;
    }

private:
    size_t idx(Index i, Index j) const {
        if (j > i) std::swap(i, j);
        return static_cast<size_t>(i * (i + 1) / 2 + j);
    }

    Index n_;
    long bits_;
    std::vector<XReal> tri_;
};

}  // namespace superosc
