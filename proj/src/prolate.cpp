#include "superosc/prolate.hpp"

namespace superosc {

XReal NodeGeometry::min_gap() const {
    if (xs.size() < 2) throw DomainError("NodeGeometry: min_gap needs at least two nodes");
    XReal g = xs[1] - xs[0];
    for (Index i = 2; i < xs.size(); ++i) g = min(g, xs[i] - xs[i - 1]);
    return g;
}

void NodeGeometry::validate(long bits) const {
    if (xs.size() < 1) throw DomainError("NodeGeometry: need at least one node");
    if (!(p_max > XReal(0))) throw DomainError("NodeGeometry: p_max must be positive");
    if (!(hbar > XReal(0))) throw DomainError("NodeGeometry: hbar must be positive");
    // Coincident or nearly coincident nodes are rejected, not merged:
    // merging would silently change the optimization problem.
    const XReal floor = XReal::pow2(-(bits / 2), bits) * lambda_min();
    for (Index i = 1; i < xs.size(); ++i) {
        const XReal gap = xs[i] - xs[i - 1];
        if (!(gap > XReal(0))) throw DomainError("NodeGeometry: coincident constraint points");
        if (gap < floor)
            throw DomainError(
                "NodeGeometry: coincident constraint points (gap below 2^(-bits/2) lambda_min)");
    }
}

NodeGeometry NodeGeometry::equispaced(Index n, const XReal& dx, XReal p_max, XReal hbar) {
    XVec xs(n);
    for (Index k = 0; k < n; ++k) xs[k] = XReal::from_long(k, dx.bits()) * dx;
    return {std::move(xs), std::move(p_max), std::move(hbar)};
}

void NodeSpec::validate(long bits) const {
    geometry.validate(bits);
    if (amps.size() != geometry.size())
        throw DomainError("NodeSpec: amplitude count must match node count");
    bool all_zero = true;
    for (Index i = 0; i < amps.size(); ++i)
        if (!(amps[i].re.is_zero() && amps[i].im.is_zero())) all_zero = false;
    if (all_zero) throw DomainError("NodeSpec: amplitudes must not all be zero");
}

ProlateMatrix build_prolate(const NodeGeometry& geom, const PrecisionContext& ctx) {
    geom.validate(ctx.bits());
    const Index n = geom.size();
    const long bits = ctx.bits();
    const XReal pi_b = XReal::pi(bits);
    const XReal pm = geom.p_max / geom.hbar;  // sine wavenumber
    SymMatrix s(n, bits);
    for (Index k = 0; k < n; ++k) {
        s.set(k, k, geom.p_max / (pi_b * geom.hbar));
        for (Index r = 0; r < k; ++r) {
            const XReal u = geom.xs[k] - geom.xs[r];
            s.set(k, r, sin(u * pm) / (pi_b * u));
        }
    }
    NodeGeometry g{geom.xs, geom.p_max, geom.hbar};
    return ProlateMatrix(std::move(g), std::move(s));
}

const CholeskyFactor& ProlateMatrix::cholesky() const {
    std::lock_guard<std::mutex> lock(lazy_->mu);
    if (!lazy_->chol) lazy_->chol = cholesky_factor(s_);
    return *lazy_->chol;
}

const SymEigen& ProlateMatrix::spectrum() const {
    std::lock_guard<std::mutex> lock(lazy_->mu);
    if (!lazy_->eig) lazy_->eig = sym_eigen(s_);
    return *lazy_->eig;
}

std::pair<XReal, XVec> smallest_eigenpair(const ProlateMatrix& p) {
    const SymEigen& eig = p.spectrum();
    XReal s_min = eig.values[0];
    const long bits = p.bits();
    const XReal eps = XReal::pow2(1 - bits, bits);
    const XReal resolvable = XReal::from_long(p.size(), bits) * eps * p.matrix().norm_inf();
    if (!(s_min > resolvable))
        throw PrecisionError(
            "smallest_eigenpair: precision exhausted (s_min indistinguishable from 0; raise bits)");
    XVec v(p.size());
    for (Index i = 0; i < p.size(); ++i) v[i] = eig.vectors(i, 0);
    // deterministic sign: largest-magnitude entry positive
    Index imax = 0;
    for (Index i = 1; i < v.size(); ++i)
        if (abs(v[i]) > abs(v[imax])) imax = i;
    if (v[imax] < XReal(0))
        for (Index i = 0; i < v.size(); ++i) v[i] = -v[i];
    return {std::move(s_min), std::move(v)};
}

XReal quadratic_form_inv(const ProlateMatrix& p, const XCVec& a) {
    if (a.size() != p.size())
        throw DomainError("quadratic_form_inv: vector length must match matrix dimension");
    const XCVec y = p.cholesky().solve(a);
    const XComplex q = cdot(a, y);
    const long bits = p.bits();
    const XReal eps = XReal::pow2(1 - bits, bits);
    // a^dagger S^{-1} a is real for symmetric real S; anything beyond
    // rounding noise in the imaginary part means the solve went bad.
    XReal scale = XReal::zero(bits);
    for (Index i = 0; i < a.size(); ++i) scale += abs(a[i]) * abs(y[i]);
    const XReal tol = XReal::from_long(64 * p.size(), bits) * eps * scale;
    if (abs(q.im) > tol)
        throw PrecisionError("quadratic_form_inv: imaginary residue above tolerance; raise bits");
    if (q.re < XReal(0))
        throw PrecisionError("quadratic_form_inv: negative value from SPD form; raise bits");
    return q.re;
}

}  // namespace superosc
