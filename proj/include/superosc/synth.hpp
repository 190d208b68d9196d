#pragma once

#include <memory>

#include "superosc/prolate.hpp"
#include "superosc/quadrature.hpp"

namespace superosc {

// Minimum-norm bandlimited interpolant: psi(x) = sum_r c_r K(x - x_r) with
// K the shifted sinc kernel and c = S^{-1} a. Unique least-L2-norm function
// with momentum support in [-p_max, p_max] meeting psi(x_k) = a_k.
class Wavefunction {
public:
    Wavefunction(NodeSpec nodes, XCVec coeffs, XReal norm_sq,
                 std::shared_ptr<const ProlateMatrix> prolate, long bits)
        : nodes_(std::move(nodes)),
          coeffs_(std::move(coeffs)),
          norm_sq_(std::move(norm_sq)),
          prolate_(std::move(prolate)),
          bits_(bits) {}

    // Any kernel-coefficient combination is a valid bandlimited function;
    // the prescribed amplitudes are back-filled as a = S c.
    static Wavefunction from_coefficients(const NodeGeometry& geom, XCVec coeffs,
                                          const PrecisionContext& ctx);

    const NodeSpec& nodes() const { return nodes_; }
    const XCVec& coeffs() const { return coeffs_; }
    const XReal& norm_sq() const { return norm_sq_; }
    const ProlateMatrix& prolate() const { return *prolate_; }
    std::shared_ptr<const ProlateMatrix> prolate_ptr() const { return prolate_; }
    long bits() const { return bits_; }

    const NodeGeometry& geometry() const { return nodes_.geometry; }
    XReal lambda_min() const { return nodes_.geometry.lambda_min(); }

    // sin(u p_max/hbar) / (pi u), analytic limit p_max/(pi hbar) at u = 0
    XReal kernel(const XReal& u) const;

private:
    NodeSpec nodes_;
    XCVec coeffs_;
    XReal norm_sq_;
    std::shared_ptr<const ProlateMatrix> prolate_;
    long bits_;
};

Wavefunction synthesize(const NodeSpec& nodes, const PrecisionContext& ctx);

XComplex eval_position(const Wavefunction& w, const XReal& x);
// Zero (exactly) outside [-p_max, p_max]; inside,
// (2 pi hbar)^{-1/2} sum_r c_r e^{-i x_r p / hbar}.
XComplex eval_momentum(const Wavefunction& w, const XReal& p);

// Momentum-space view with its hard support.
struct MomentumRep {
    const Wavefunction* w;
    XComplex operator()(const XReal& p) const { return eval_momentum(*w, p); }
    const XReal& support() const { return w->geometry().p_max; }
};
inline MomentumRep momentum_rep(const Wavefunction& w) { return {&w}; }

// Scales coefficients and prescribed amplitudes by 1/sqrt(norm_sq).
Wavefunction normalize(const Wavefunction& w);

// Amplitudes set to the s_min eigenvector, synthesized and normalized:
// the node amplitudes come out as s_min^{1/2} v_k.
Wavefunction maximal_superoscillation(const NodeGeometry& geom, const PrecisionContext& ctx);

enum class WavelengthEstimator { RealZeroCrossings, AbsExtrema };

// 2 x mean gap between consecutive zero crossings of Re psi in [lo, hi]
// (default), refined by bisection from a sampling grid of >= 64 points per
// node gap. Throws DomainError with fewer than 3 crossings.
XReal local_wavelength(const Wavefunction& w, const XReal& lo, const XReal& hi,
                       WavelengthEstimator est = WavelengthEstimator::RealZeroCrossings);

// <a, b> = sum_{r,j} conj(c_r) d_j K(x_r - y_j): exact kernel Gram inner
// product, no quadrature. Both functions must share p_max and hbar.
XComplex inner_product(const Wavefunction& a, const Wavefunction& b);

// Parseval route: composite Gauss-Legendre quadrature of |psi~|^2 over the
// momentum support.
XReal norm_sq_momentum(const Wavefunction& w, int order = 24);

// Position route: quadrature of |psi|^2 over [-half_width, half_width] plus
// the closed-form tail of the 1/x asymptotics (rational part integrated
// exactly, oscillatory part integrated by parts with a reported remainder
// bound). Required because a hard momentum cutoff makes |psi|^2 decay only
// like 1/x^2.
struct PositionNorm {
    XReal value;            // quadrature + analytic tail
    XReal quadrature_part;  // over [-half_width, half_width]
    XReal tail;             // analytic tail, both sides
    XReal remainder_bound;  // bound on the neglected oscillatory remainder
};
PositionNorm norm_sq_position(const Wavefunction& w, const XReal& half_width, int order = 16);

}  // namespace superosc
