#include "superosc/synth.hpp"

#include <vector>

namespace superosc {

namespace {

XReal sinc_kernel(const XReal& u, const XReal& p_max, const XReal& hbar, const XReal& pi_b) {
    if (u.is_zero()) return p_max / (pi_b * hbar);
    return sin(u * (p_max / hbar)) / (pi_b * u);
}

// norm_sq = Re(a^dagger c) for c = S^{-1} a. The imaginary residue scales
// with the conditioning of the solve, so the check takes a cond estimate.
XReal norm_from_solution(const XCVec& amps, const XCVec& coeffs, long bits, Index n,
                         const XReal& cond) {
    const XComplex q = cdot(amps, coeffs);
    const XReal eps = XReal::pow2(1 - bits, bits);
    XReal scale = XReal::zero(bits);
    for (Index i = 0; i < n; ++i) scale += abs(amps[i]) * abs(coeffs[i]);
    if (abs(q.im) > XReal::from_long(64 * n, bits) * eps * cond * scale)
        throw PrecisionError("synthesize: imaginary residue in norm above tolerance; raise bits");
    if (!(q.re > XReal(0)))
        throw PrecisionError("synthesize: nonpositive norm from SPD form; raise bits");
    return q.re;
}

}  // namespace

XReal Wavefunction::kernel(const XReal& u) const {
    return sinc_kernel(u, nodes_.geometry.p_max, nodes_.geometry.hbar, XReal::pi(bits_));
}

Wavefunction synthesize(const NodeSpec& nodes, const PrecisionContext& ctx) {
    nodes.validate(ctx.bits());
    const Index n = nodes.size();
    const long bits = ctx.bits();

    auto prolate = std::make_shared<const ProlateMatrix>(build_prolate(nodes.geometry, ctx));
    XCVec coeffs = prolate->cholesky().solve(nodes.amps);
    const XReal cond = spd_condition_estimate(prolate->cholesky());
    XReal norm_sq = norm_from_solution(nodes.amps, coeffs, bits, n, cond);

    Wavefunction w(nodes, std::move(coeffs), std::move(norm_sq), prolate, bits);

    // Interpolation self-check: the synthesized function must reproduce the
    // prescribed amplitudes up to rounding in the kernel sums.
    const XReal eps = XReal::pow2(1 - bits, bits);
    for (Index k = 0; k < n; ++k) {
        XReal mag = XReal::zero(bits);
        for (Index r = 0; r < n; ++r) mag += abs(w.coeffs()[r]) * abs(prolate->matrix()(k, r));
        const XComplex resid = eval_position(w, nodes.geometry.xs[k]) - nodes.amps[k];
        if (abs(resid) > XReal::from_long(256 * n, bits) * eps * (mag + max_abs(nodes.amps)))
            throw PrecisionError("synthesize: interpolation residual above tolerance; raise bits");
    }
    return w;
}

Wavefunction Wavefunction::from_coefficients(const NodeGeometry& geom, XCVec coeffs,
                                             const PrecisionContext& ctx) {
    geom.validate(ctx.bits());
    if (coeffs.size() != geom.size())
        throw DomainError("from_coefficients: coefficient count must match node count");
    auto prolate = std::make_shared<const ProlateMatrix>(build_prolate(geom, ctx));
    const Index n = geom.size();
    XCVec amps(n);
    for (Index k = 0; k < n; ++k) {
        XComplex s = XComplex::zero(ctx.bits());
        for (Index r = 0; r < n; ++r) s += coeffs[r] * prolate->matrix()(k, r);
        amps[k] = std::move(s);
    }
    // forward product: no inverse involved, positive-sum rounding scale
    XReal norm_sq = quadratic_form(prolate->matrix(), coeffs);
    NodeSpec nodes{geom, std::move(amps)};
    return Wavefunction(std::move(nodes), std::move(coeffs), std::move(norm_sq), prolate,
                        ctx.bits());
}

XComplex eval_position(const Wavefunction& w, const XReal& x) {
    const NodeGeometry& g = w.geometry();
    const long bits = w.bits();
    const XReal pi_b = XReal::pi(bits);
    XComplex s = XComplex::zero(bits);
    for (Index r = 0; r < g.size(); ++r)
        s += w.coeffs()[r] * sinc_kernel(x - g.xs[r], g.p_max, g.hbar, pi_b);
    return s;
}

XComplex eval_momentum(const Wavefunction& w, const XReal& p) {
    const NodeGeometry& g = w.geometry();
    const long bits = w.bits();
    if (abs(p) > g.p_max) return XComplex::zero(bits);
    const XReal pi_b = XReal::pi(bits);
    XComplex s = XComplex::zero(bits);
    for (Index r = 0; r < g.size(); ++r)
        s += w.coeffs()[r] * XComplex::cis(-(g.xs[r] * p / g.hbar));
    return s / sqrt(XReal(2) * pi_b * g.hbar);
}

Wavefunction normalize(const Wavefunction& w) {
    if (!(w.norm_sq() > XReal(0))) throw PrecisionError("normalize: norm_sq must be positive");
    const XReal inv = XReal(1) / sqrt(w.norm_sq());
    const Index n = w.nodes().size();
    XCVec coeffs(n), amps(n);
    for (Index i = 0; i < n; ++i) {
        coeffs[i] = w.coeffs()[i] * inv;
        amps[i] = w.nodes().amps[i] * inv;
    }
    const XReal cond = spd_condition_estimate(w.prolate().cholesky());
    XReal norm_sq = norm_from_solution(amps, coeffs, w.bits(), n, cond);
    NodeSpec nodes{w.geometry(), std::move(amps)};
    return Wavefunction(std::move(nodes), std::move(coeffs), std::move(norm_sq),
                        w.prolate_ptr(), w.bits());
}

Wavefunction maximal_superoscillation(const NodeGeometry& geom, const PrecisionContext& ctx) {
    geom.validate(ctx.bits());
    auto prolate = std::make_shared<const ProlateMatrix>(build_prolate(geom, ctx));
    auto [s_min, v] = smallest_eigenpair(*prolate);
    (void)s_min;
    XCVec amps = to_complex(v);
    XCVec coeffs = prolate->cholesky().solve(amps);
    const XReal cond = spd_condition_estimate(prolate->cholesky());
    XReal norm_sq = norm_from_solution(amps, coeffs, ctx.bits(), geom.size(), cond);
    NodeSpec nodes{geom, std::move(amps)};
    Wavefunction w(std::move(nodes), std::move(coeffs), std::move(norm_sq), prolate, ctx.bits());
    return normalize(w);
}

XReal local_wavelength(const Wavefunction& w, const XReal& lo, const XReal& hi,
                       WavelengthEstimator est) {
    if (!(lo < hi)) throw DomainError("local_wavelength: empty interval");
    const long bits = w.bits();
    const NodeGeometry& g = w.geometry();

    XReal step_unit = g.size() >= 2 ? g.min_gap() : g.lambda_min();
    Index samples = (ceil((hi - lo) / step_unit).to_long() + 1) * 64;
    if (samples < 256) samples = 256;
    if (samples > (1 << 20)) samples = 1 << 20;

    const XReal width = hi - lo;
    auto f = [&](const XReal& x) {
        return est == WavelengthEstimator::RealZeroCrossings ? eval_position(w, x).re
                                                             : abs(eval_position(w, x));
    };
    std::vector<XReal> xs_grid(static_cast<size_t>(samples) + 1);
    std::vector<XReal> vals(static_cast<size_t>(samples) + 1);
    for (Index i = 0; i <= samples; ++i) {
        xs_grid[static_cast<size_t>(i)] =
            lo + width * XReal::from_long(i, bits) / XReal::from_long(samples, bits);
        vals[static_cast<size_t>(i)] = f(xs_grid[static_cast<size_t>(i)]);
    }

    std::vector<XReal> marks;
    if (est == WavelengthEstimator::RealZeroCrossings) {
        for (Index i = 0; i < samples; ++i) {
            const XReal& a = vals[static_cast<size_t>(i)];
            const XReal& b = vals[static_cast<size_t>(i + 1)];
            if (a.is_zero()) {
                marks.push_back(xs_grid[static_cast<size_t>(i)]);
                continue;
            }
            if (b.is_zero()) continue;  // picked up as the next sample's exact zero
            if ((a > XReal(0)) != (b > XReal(0))) {
                XReal xl = xs_grid[static_cast<size_t>(i)], xr = xs_grid[static_cast<size_t>(i + 1)];
                XReal fl = a;
                for (int it = 0; it < 128; ++it) {
                    XReal mid = (xl + xr) / XReal(2);
                    XReal fm = f(mid);
                    if (fm.is_zero()) { xl = xr = mid; break; }
                    if ((fm > XReal(0)) == (fl > XReal(0))) { xl = mid; fl = fm; }
                    else { xr = mid; }
                }
                marks.push_back((xl + xr) / XReal(2));
            }
        }
    } else {
        // local maxima of |psi| on the grid, parabolic refinement
        for (Index i = 1; i < samples; ++i) {
            const XReal& fm = vals[static_cast<size_t>(i)];
            if (fm > vals[static_cast<size_t>(i - 1)] && fm > vals[static_cast<size_t>(i + 1)]) {
                const XReal h = width / XReal::from_long(samples, bits);
                const XReal num = vals[static_cast<size_t>(i - 1)] - vals[static_cast<size_t>(i + 1)];
                const XReal den = vals[static_cast<size_t>(i - 1)] -
                                  XReal(2) * fm + vals[static_cast<size_t>(i + 1)];
                XReal shift = den.is_zero() ? XReal(0) : (num / den) * (h / XReal(2));
                marks.push_back(xs_grid[static_cast<size_t>(i)] + shift);
            }
        }
    }

    if (marks.size() < 3)
        throw DomainError("local_wavelength: interval not oscillatory (fewer than 3 crossings)");
    XReal mean_gap = (marks.back() - marks.front()) / XReal::from_long(static_cast<long>(marks.size()) - 1, bits);
    return XReal(2) * mean_gap;
}

XComplex inner_product(const Wavefunction& a, const Wavefunction& b) {
    const NodeGeometry& ga = a.geometry();
    const NodeGeometry& gb = b.geometry();
    if (ga.p_max != gb.p_max || ga.hbar != gb.hbar)
        throw DomainError("inner_product: wavefunctions must share p_max and hbar");
    const long bits = a.bits() > b.bits() ? a.bits() : b.bits();
    const XReal pi_b = XReal::pi(bits);
    XComplex s = XComplex::zero(bits);
    for (Index r = 0; r < ga.size(); ++r) {
        XComplex row = XComplex::zero(bits);
        for (Index j = 0; j < gb.size(); ++j)
            row += b.coeffs()[j] * sinc_kernel(ga.xs[r] - gb.xs[j], ga.p_max, ga.hbar, pi_b);
        s += conj(a.coeffs()[r]) * row;
    }
    return s;
}

XReal norm_sq_momentum(const Wavefunction& w, int order) {
    const NodeGeometry& g = w.geometry();
    const long bits = w.bits();
    const GaussLegendre& rule = gauss_legendre(order, bits);
    // |psi~|^2 oscillates in p no faster than the node span allows; keep
    // panels at a quarter of that period.
    XReal span = g.size() >= 2 ? g.span() : g.lambda_min();
    long panels = 4 + (ceil(XReal(8) * span * g.p_max / (XReal::pi(bits) * g.hbar))).to_long();
    auto f = [&](const XReal& p) { return abs2(eval_momentum(w, p)); };
    return integrate(f, -g.p_max, g.p_max, panels, rule);
}

namespace {

struct TailSide {
    XReal value;
    XReal bound;
};

// Integral of |psi|^2 over [X, +inf) for psi = sum_r c_r K(x - x_r), X to
// the right of every node. Writing psi = [sin(w x) P(x) - cos(w x) Q(x)]/pi
// with w = p_max/hbar and P, Q rational, the non-oscillatory part has an
// exact log/partial-fraction integral and the oscillatory part is
// integrated by parts twice, leaving a bounded remainder.
TailSide tail_beyond(const std::vector<XReal>& xs, const std::vector<XComplex>& cs,
                     const XReal& X, const XReal& wfreq, const XReal& pi_b, long bits) {
    const size_t n = xs.size();
    std::vector<XComplex> alpha(n), beta(n);
    for (size_t r = 0; r < n; ++r) {
        XReal s, c;
        sin_cos(wfreq * xs[r], s, c);
        alpha[r] = cs[r] * c;
        beta[r] = cs[r] * s;
    }
    // exact rational integrals J_rs = int_X^inf dx / ((x-x_r)(x-x_s))
    XReal s_rat = XReal::zero(bits);
    for (size_t r = 0; r < n; ++r) {
        for (size_t s = 0; s < n; ++s) {
            const XReal wgt = (alpha[r] * conj(alpha[s])).re + (beta[r] * conj(beta[s])).re;
            XReal j(0);
            if (r == s) {
                j = XReal(1) / (X - xs[r]);
            } else {
                j = log((X - xs[s]) / (X - xs[r])) / (xs[r] - xs[s]);
            }
            s_rat += wgt * j;
        }
    }
    // boundary data for the oscillatory pieces
    XComplex P = XComplex::zero(bits), Q = XComplex::zero(bits);
    XComplex Pp = XComplex::zero(bits), Qp = XComplex::zero(bits);
    for (size_t r = 0; r < n; ++r) {
        const XReal d = X - xs[r];
        P += alpha[r] / d;
        Q += beta[r] / d;
        Pp -= alpha[r] / (d * d);
        Qp -= beta[r] / (d * d);
    }
    const XReal F = abs2(P) - abs2(Q);
    const XReal G = (P * conj(Q)).re;
    const XReal Fp = XReal(2) * ((Pp * conj(P)).re - (Qp * conj(Q)).re);
    const XReal Gp = (Pp * conj(Q)).re + (P * conj(Qp)).re;

    const XReal omega = XReal(2) * wfreq;
    XReal sX, cX;
    sin_cos(omega * X, sX, cX);
    // int_X^inf cos(om x) F dx = -sin(om X) F(X)/om - cos(om X) F'(X)/om^2 + R_F
    const XReal icosF = -(sX * F) / omega - (cX * Fp) / (omega * omega);
    // int_X^inf sin(om x) G dx =  cos(om X) G(X)/om - sin(om X) G'(X)/om^2 + R_G
    const XReal isinG = (cX * G) / omega - (sX * Gp) / (omega * omega);
    // |R_F| <= 2|F'(X)|/om^2 and |R_G| <= 2|G'(X)|/om^2; the cos-F piece
    // enters the total with weight 1/2.
    const XReal rem = (abs(Fp) + XReal(2) * abs(Gp)) / (omega * omega);

    const XReal pi2 = pi_b * pi_b;
    TailSide out;
    out.value = (s_rat / XReal(2) - icosF / XReal(2) - isinG) / pi2;
    out.bound = rem / pi2;
    return out;
}

}  // namespace

PositionNorm norm_sq_position(const Wavefunction& w, const XReal& half_width, int order) {
    const NodeGeometry& g = w.geometry();
    const long bits = w.bits();
    XReal reach = max(abs(g.xs[0]), abs(g.xs[g.size() - 1]));
    if (!(half_width > reach + g.lambda_min()))
        throw DomainError("norm_sq_position: half_width must clear the node span");

    const GaussLegendre& rule = gauss_legendre(order, bits);
    // |psi|^2 oscillates at wavelength lambda_min/2; panel width lambda_min/8
    long panels = (ceil(XReal(16) * half_width / g.lambda_min())).to_long() + 1;
    auto f = [&](const XReal& x) { return abs2(eval_position(w, x)); };
    XReal quad = integrate(f, -half_width, half_width, panels, rule);

    const XReal pi_b = XReal::pi(bits);
    const XReal wfreq = g.p_max / g.hbar;
    std::vector<XReal> xs_r(static_cast<size_t>(g.size()));
    std::vector<XReal> xs_m(static_cast<size_t>(g.size()));
    std::vector<XComplex> cs(static_cast<size_t>(g.size()));
    for (Index i = 0; i < g.size(); ++i) {
        xs_r[static_cast<size_t>(i)] = g.xs[i];
        xs_m[static_cast<size_t>(i)] = -g.xs[i];
        cs[static_cast<size_t>(i)] = w.coeffs()[i];
    }
    TailSide right = tail_beyond(xs_r, cs, half_width, wfreq, pi_b, bits);
    // psi(-y) is the same kernel sum with mirrored nodes
    TailSide left = tail_beyond(xs_m, cs, half_width, wfreq, pi_b, bits);

    PositionNorm out{quad + right.value + left.value, quad, right.value + left.value,
                     right.bound + left.bound};
    return out;
}

}  // namespace superosc
