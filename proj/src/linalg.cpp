#include "superosc/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "superosc/errors.hpp"

namespace superosc {

CholeskyFactor cholesky_factor(const SymMatrix& s) {
    const Index n = s.size();
    const long bits = s.bits();
    XMat l = XMat::Constant(n, n, XReal::zero(bits));
    for (Index j = 0; j < n; ++j) {
        XReal d = s(j, j);
        for (Index k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > XReal(0)))
            throw PrecisionError(
                "cholesky_factor: matrix not numerically SPD at current precision; raise bits");
        l(j, j) = sqrt(d);
        for (Index i = j + 1; i < n; ++i) {
            XReal v = s(i, j);
            for (Index k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
            l(i, j) = v / l(j, j);
        }
    }
    return {std::move(l), bits};
}

XVec CholeskyFactor::solve(const XVec& b) const {
    const Index n = lower.rows();
    XVec y(n);
    for (Index i = 0; i < n; ++i) {
        XReal v = b[i];
        for (Index k = 0; k < i; ++k) v -= lower(i, k) * y[k];
        y[i] = v / lower(i, i);
    }
    XVec x(n);
    for (Index i = n - 1; i >= 0; --i) {
        XReal v = y[i];
        for (Index k = i + 1; k < n; ++k) v -= lower(k, i) * x[k];
        x[i] = v / lower(i, i);
    }
    return x;
}

XCVec CholeskyFactor::solve(const XCVec& b) const {
    const Index n = lower.rows();
    XVec re(n), im(n);
    for (Index i = 0; i < n; ++i) {
        re[i] = b[i].re;
        im[i] = b[i].im;
    }
    XVec xr = solve(re), xi = solve(im);
    XCVec x(n);
    for (Index i = 0; i < n; ++i) x[i] = XComplex(xr[i], xi[i]);
    return x;
}

XVec cholesky_solve(const SymMatrix& s, const XVec& b) {
    return cholesky_factor(s).solve(b);
}

XReal spd_condition_estimate(const CholeskyFactor& f) {
    const Index n = f.lower.rows();
    XReal lo = f.lower(0, 0), hi = f.lower(0, 0);
    for (Index i = 1; i < n; ++i) {
        lo = min(lo, f.lower(i, i));
        hi = max(hi, f.lower(i, i));
    }
    return (hi / lo) * (hi / lo);
}

XReal quadratic_form(const SymMatrix& s, const XCVec& v) {
    const Index n = s.size();
    if (v.size() != n) throw DomainError("quadratic_form: vector length must match dimension");
    const long bits = s.bits();
    XComplex q = XComplex::zero(bits);
    XReal scale = XReal::zero(bits);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            q += conj(v[i]) * v[j] * s(i, j);
            scale += abs(v[i]) * abs(v[j]) * abs(s(i, j));
        }
    const XReal eps = XReal::pow2(1 - bits, bits);
    if (abs(q.im) > XReal::from_long(64 * n, bits) * eps * scale)
        throw PrecisionError("quadratic_form: imaginary residue above tolerance");
    return q.re;
}

namespace {

void jacobi_rotate(XMat& a, XMat& v, Index p, Index q, long bits) {
    const XReal apq = a(p, q);
    if (apq.is_zero()) return;
    const XReal one(1);
    XReal theta = (a(q, q) - a(p, p)) / (XReal(2) * apq);
    XReal t = one / (abs(theta) + sqrt(one + theta * theta));
    if (theta < XReal(0)) t = -t;
    const XReal c = one / sqrt(t * t + one);
    const XReal s = t * c;
    const XReal tau = s / (one + c);

    const XReal app = a(p, p), aqq = a(q, q);
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = XReal::zero(bits);
    a(q, p) = XReal::zero(bits);
    const Index n = a.rows();
    for (Index i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        const XReal aip = a(i, p), aiq = a(i, q);
        a(i, p) = a(p, i) = aip - s * (aiq + tau * aip);
        a(i, q) = a(q, i) = aiq + s * (aip - tau * aiq);
    }
    for (Index i = 0; i < n; ++i) {
        const XReal vip = v(i, p), viq = v(i, q);
        v(i, p) = vip - s * (viq + tau * vip);
        v(i, q) = viq + s * (vip - tau * viq);
    }
}

XReal off_diagonal_frobenius(const XMat& a) {
    const Index n = a.rows();
    XReal s = XReal::zero(XReal::kMinBits);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return sqrt(s);
}

}  // namespace

SymEigen sym_eigen(const SymMatrix& sym) {
    const Index n = sym.size();
    const long bits = sym.bits();
    XMat a = sym.dense();
    XMat v = XMat::Constant(n, n, XReal::zero(bits));
    for (Index i = 0; i < n; ++i) v(i, i) = XReal::from_long(1, bits);

    const XReal eps = XReal::pow2(1 - bits, bits);
    const XReal target = XReal::from_long(n * n, bits) * eps * sym.norm_frobenius();

    constexpr int kMaxSweeps = 128;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (!(off_diagonal_frobenius(a) > target)) break;
        for (Index p = 0; p < n - 1; ++p)
            for (Index q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q, bits);
    }
    if (sweep == kMaxSweeps)
        throw ConvergenceError(
            "sym_eigen: Jacobi sweep cap reached (off-diagonal mass " +
            off_diagonal_frobenius(a).to_string(8) + ", target " + target.to_string(8) + ")");

    std::vector<Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(),
              [&](Index i, Index j) { return a(i, i) < a(j, j); });

    SymEigen out{XVec(n), XMat(n, n)};
    for (Index k = 0; k < n; ++k) {
        out.values[k] = a(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]);
        for (Index i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[static_cast<size_t>(k)]);
    }
    return out;
}

}  // namespace superosc
