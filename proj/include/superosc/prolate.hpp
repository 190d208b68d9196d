#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "superosc/linalg.hpp"
#include "superosc/precision.hpp"

namespace superosc {

// Constraint-point geometry: positions, momentum cutoff, hbar convention.
// lambda_min = 2*pi*hbar/p_max is the single derived length unit.
struct NodeGeometry {
    XVec xs;      // strictly increasing
    XReal p_max;  // > 0
    XReal hbar;   // > 0, defaults to 1

    Index size() const { return xs.size(); }
    XReal lambda_min() const { return XReal(2) * XReal::pi(p_max.bits()) * hbar / p_max; }
    XReal min_gap() const;  // smallest node spacing; throws for a single node
    XReal span() const { return xs[xs.size() - 1] - xs[0]; }

    void validate(long bits) const;

    static NodeGeometry equispaced(Index n, const XReal& dx, XReal p_max, XReal hbar);
};

// Geometry plus prescribed amplitudes a_k.
struct NodeSpec {
    NodeGeometry geometry;
    XCVec amps;  // not all zero

    Index size() const { return geometry.size(); }
    void validate(long bits) const;
};

// The symmetric positive-definite kernel Gram matrix
//   S_kr = sin((x_k - x_r) p_max / hbar) / (pi (x_k - x_r)),
//   S_kk = p_max / (pi hbar)   (analytic sinc limit),
// with lazily computed Cholesky factorization and spectrum. Immutable after
// build; the lazy members are computed once under a lock, so concurrent
// readers see either absent or fully computed state.
class ProlateMatrix {
public:
    ProlateMatrix(NodeGeometry geom, SymMatrix s)
        : geom_(std::move(geom)), s_(std::move(s)), lazy_(std::make_unique<Lazy>()) {}

    const NodeGeometry& geometry() const { return geom_; }
    const SymMatrix& matrix() const { return s_; }
    Index size() const { return s_.size(); }
    long bits() const { return s_.bits(); }

    const CholeskyFactor& cholesky() const;
    const SymEigen& spectrum() const;

private:
    struct Lazy {
        std::mutex mu;
        std::optional<CholeskyFactor> chol;
        std::optional<SymEigen> eig;
    };

    NodeGeometry geom_;
    SymMatrix s_;
    std::unique_ptr<Lazy> lazy_;
};

ProlateMatrix build_prolate(const NodeGeometry& geom, const PrecisionContext& ctx);
inline ProlateMatrix build_prolate(const NodeSpec& nodes, const PrecisionContext& ctx) {
    nodes.validate(ctx.bits());
    return build_prolate(nodes.geometry, ctx);
}

// (s_min, v) with v real, ||v|| = 1, sign fixed so the largest-magnitude
// entry is positive. Throws PrecisionError when s_min is indistinguishable
// from zero at working precision.
std::pair<XReal, XVec> smallest_eigenpair(const ProlateMatrix& p);

// a^dagger S^{-1} a, via Cholesky solve (never an explicit inverse). The
// result is real nonnegative; the imaginary residue is checked against
// tolerance and discarded.
XReal quadratic_form_inv(const ProlateMatrix& p, const XCVec& a);

}  // namespace superosc
