#include "superosc/slit.hpp"

#include <utility>
#include <vector>

namespace superosc {

namespace {

struct XPoint {
    XReal u;         // offset from window center, divided by hbar
    XComplex wpsi;   // quadrature weight times psi value
};

// Windowed transform evaluated from precomputed x-quadrature data. The
// window-center phase is dropped; every consumer uses |psi~_W|^2 only.
XComplex transform_at(const std::vector<XPoint>& pts, const XReal& p, long bits) {
    XComplex acc = XComplex::zero(bits);
    for (const XPoint& q : pts) acc += q.wpsi * XComplex::cis(-(p * q.u));
    return acc;
}

struct Moments {
    XReal mass;
    XReal abs_p_mass;
    XReal above_mass;
};

}  // namespace

SlitReport truncate_and_transform(const SlitWindow& win, const XReal& p_grid_max, long n_quad,
                                  Index density_grid_points) {
    if (win.source == nullptr) throw DomainError("truncate_and_transform: missing source");
    if (!(win.lo < win.hi)) throw DomainError("truncate_and_transform: window must have x_lo < x_hi");
    if (n_quad < 4)
        throw QuadratureError("truncate_and_transform: n_quad too small", 16);
    if (density_grid_points < 2)
        throw DomainError("truncate_and_transform: density grid needs >= 2 points");

    const Wavefunction& w = *win.source;
    const NodeGeometry& g = w.geometry();
    const long bits = w.bits();
    const XReal pi_b = XReal::pi(bits);
    const XReal lambda = g.lambda_min();
    const XReal two(2), four(4);

    // momentum grid must cover the superoscillation scale pi hbar / dx
    if (g.size() >= 2) {
        const XReal required = four * pi_b * g.hbar / g.min_gap();
        if (p_grid_max < required)
            throw DomainError("truncate_and_transform: p_grid_max below 4*pi*hbar/spacing = " +
                              required.to_string(6));
    } else if (p_grid_max < g.p_max) {
        throw DomainError("truncate_and_transform: p_grid_max must cover the momentum cutoff");
    }

    SlitReport report;
    report.p_grid_max = p_grid_max;
    report.n_quad = n_quad;

    const XReal so_period = g.size() >= 2 ? two * g.min_gap() : lambda;

    // Whole-line shortcut: when the window captures essentially all of the
    // mass (envelope tail below 2^-20 of the norm), the windowed transform
    // is the band-limited transform itself and the momentum support is
    // exactly [-p_max, p_max].
    bool fast = false;
    XReal env_tail{0};
    if (win.lo < g.xs[0] && win.hi > g.xs[g.size() - 1]) {
        XReal c1 = XReal::zero(bits);
        for (Index r = 0; r < g.size(); ++r) c1 += abs(w.coeffs()[r]);
        const XReal dlo = g.xs[0] - win.lo;
        const XReal dhi = win.hi - g.xs[g.size() - 1];
        env_tail = c1 * c1 / (pi_b * pi_b) * (XReal(1) / dlo + XReal(1) / dhi);
        fast = env_tail < XReal::pow2(-20, bits) * w.norm_sq();
    }

    const GaussLegendre& rule = gauss_legendre(static_cast<int>(n_quad), bits);
    const GaussLegendre& rule_half =
        gauss_legendre(static_cast<int>(n_quad / 2 < 2 ? 2 : n_quad / 2), bits);

    if (fast) {
        report.whole_line_fast_path = true;
        report.tail_bound = env_tail;
        report.captured_probability = (w.norm_sq() - env_tail) / w.norm_sq();
        report.x_panels = 0;

        const XReal band = min(p_grid_max, g.p_max);
        const XReal span_eff = max(g.size() >= 2 ? g.span() : lambda, lambda / two);
        // |psi~|^2 varies in p on the scale 2 pi hbar / span
        const XReal w_p = pi_b * g.hbar / (two * span_eff);
        auto moments_with = [&](const GaussLegendre& rr) {
            Moments m{XReal::zero(bits), XReal::zero(bits), XReal::zero(bits)};
            const Index panels = ceil(two * band / w_p).to_long() + 4;
            const XReal width = two * band / XReal::from_long(panels, bits);
            for (Index k = 0; k < panels; ++k) {
                const XReal lo = -band + XReal::from_long(k, bits) * width;
                const XReal mid = lo + width / two;
                const XReal half = width / two;
                for (Index i = 0; i < rr.nodes.size(); ++i) {
                    const XReal p = mid + half * rr.nodes[i];
                    const XReal d = abs2(eval_momentum(w, p)) * rr.weights[i] * half;
                    m.mass += d;
                    m.abs_p_mass += abs(p) * d;
                }
            }
            // support ends at the cutoff
            return m;
        };
        Moments m = moments_with(rule);
        Moments m2 = moments_with(rule_half);
        report.p_panels = ceil(two * band / w_p).to_long() + 4;
        report.mass_in_grid = m.mass;
        report.quadrature_error_estimate = abs(m.mass - m2.mass);
        report.expectation_abs_p = m.abs_p_mass / m.mass;
        report.fraction_above_cutoff = XReal::zero(bits);

        report.p_grid.reserve(static_cast<size_t>(density_grid_points));
        report.density.reserve(static_cast<size_t>(density_grid_points));
        for (Index i = 0; i < density_grid_points; ++i) {
            const XReal p = -p_grid_max + two * p_grid_max * XReal::from_long(i, bits) /
                                              XReal::from_long(density_grid_points - 1, bits);
            report.p_grid.push_back(p);
            report.density.push_back(abs2(eval_momentum(w, p)) / m.mass);
        }
        return report;
    }

    // ---- windowed path -------------------------------------------------

    // Panels must resolve the superoscillation and the fastest Fourier
    // phase on the grid.
    const XReal w_x = min(min(so_period, lambda), two * pi_b * g.hbar / p_grid_max) / four;
    const Index x_panels = ceil((win.hi - win.lo) / w_x).to_long() + 1;
    report.x_panels = x_panels;

    const XReal x_center = (win.lo + win.hi) / two;
    auto make_points = [&](const GaussLegendre& rr) {
        std::vector<XPoint> pts;
        pts.reserve(static_cast<size_t>(x_panels * rr.nodes.size()));
        const XReal width = (win.hi - win.lo) / XReal::from_long(x_panels, bits);
        for (Index k = 0; k < x_panels; ++k) {
            const XReal lo = win.lo + XReal::from_long(k, bits) * width;
            const XReal mid = lo + width / two;
            const XReal half = width / two;
            for (Index i = 0; i < rr.nodes.size(); ++i) {
                const XReal x = mid + half * rr.nodes[i];
                XPoint pt{(x - x_center) / g.hbar, eval_position(w, x) * (rr.weights[i] * half)};
                pts.push_back(std::move(pt));
            }
        }
        return pts;
    };
    // psi values are reused across every momentum evaluation
    const std::vector<XPoint> pts = make_points(rule);
    const std::vector<XPoint> pts_half = make_points(rule_half);

    auto captured_direct = [&](const GaussLegendre& rr) {
        auto f = [&](const XReal& x) { return abs2(eval_position(w, x)); };
        return integrate(f, win.lo, win.hi, x_panels, rr);
    };
    const XReal captured = captured_direct(rule);
    const XReal captured_half = captured_direct(rule_half);
    report.captured_probability = captured / w.norm_sq();

    if (!(report.captured_probability > XReal::pow2(-(bits / 2), bits)))
        throw DomainError("truncate_and_transform: slit misses wave function "
                          "(captured probability below 2^(-bits/2) at working precision)");

    const XReal inv_norm = XReal(1) / sqrt(two * pi_b * g.hbar);
    auto density_at = [&](const std::vector<XPoint>& ps, const XReal& p) {
        const XComplex t = transform_at(ps, p, bits);
        return abs2(t) * (inv_norm * inv_norm);
    };

    // Momentum panels: |psi~_W| varies on the scale 2 pi hbar / (L/2).
    const XReal len = win.hi - win.lo;
    const XReal w_p = pi_b * g.hbar / len;
    auto segment_moments = [&](const std::vector<XPoint>& ps, const GaussLegendre& rr,
                               const XReal& a, const XReal& b, bool above) {
        Moments m{XReal::zero(bits), XReal::zero(bits), XReal::zero(bits)};
        if (!(a < b)) return m;
        const Index panels = ceil((b - a) / w_p).to_long() + 1;
        const XReal width = (b - a) / XReal::from_long(panels, bits);
        for (Index k = 0; k < panels; ++k) {
            const XReal lo = a + XReal::from_long(k, bits) * width;
            const XReal mid = lo + width / two;
            const XReal half = width / two;
            for (Index i = 0; i < rr.nodes.size(); ++i) {
                const XReal p = mid + half * rr.nodes[i];
                const XReal d = density_at(ps, p) * rr.weights[i] * half;
                m.mass += d;
                m.abs_p_mass += abs(p) * d;
            }
        }
        if (above) m.above_mass = m.mass;
        return m;
    };

    const XReal pmax = g.p_max;
    const bool grid_covers_cutoff = p_grid_max > pmax;
    std::vector<std::pair<std::pair<XReal, XReal>, bool>> segments;
    if (grid_covers_cutoff) {
        segments.push_back({{-p_grid_max, -pmax}, true});
        segments.push_back({{-pmax, pmax}, false});
        segments.push_back({{pmax, p_grid_max}, true});
    } else {
        segments.push_back({{-p_grid_max, p_grid_max}, false});
    }

    Moments total{XReal::zero(bits), XReal::zero(bits), XReal::zero(bits)};
    Moments total_half{XReal::zero(bits), XReal::zero(bits), XReal::zero(bits)};
    long p_panels = 0;
    for (const auto& seg : segments) {
        Moments m = segment_moments(pts, rule, seg.first.first, seg.first.second, seg.second);
        Moments mh =
            segment_moments(pts_half, rule_half, seg.first.first, seg.first.second, seg.second);
        total.mass += m.mass;
        total.abs_p_mass += m.abs_p_mass;
        total.above_mass += m.above_mass;
        total_half.mass += mh.mass;
        total_half.abs_p_mass += mh.abs_p_mass;
        total_half.above_mass += mh.above_mass;
        p_panels += ceil((seg.first.second - seg.first.first) / w_p).to_long() + 1;
    }
    report.p_panels = p_panels;

    const XReal err_est = abs(captured - captured_half) + abs(total.mass - total_half.mass);
    report.quadrature_error_estimate = err_est;
    if (err_est > XReal::from_string("1e-6", bits) * captured)
        throw QuadratureError(
            "truncate_and_transform: estimated quadrature error above 1e-6 of captured mass; "
            "raise n_quad",
            2 * n_quad);

    report.mass_in_grid = total.mass;
    report.expectation_abs_p = total.abs_p_mass / total.mass;
    report.fraction_above_cutoff = total.above_mass / total.mass;

    // Parseval: the windowed function's momentum mass over the whole line
    // equals the captured position mass, so the grid misses exactly the
    // deficit (clamped against quadrature noise).
    XReal deficit = captured - total.mass;
    if (deficit < XReal(0)) deficit = XReal::zero(bits);
    report.tail_bound = deficit + err_est;

    report.p_grid.reserve(static_cast<size_t>(density_grid_points));
    report.density.reserve(static_cast<size_t>(density_grid_points));
    for (Index i = 0; i < density_grid_points; ++i) {
        const XReal p = -p_grid_max + two * p_grid_max * XReal::from_long(i, bits) /
                                          XReal::from_long(density_grid_points - 1, bits);
        report.p_grid.push_back(p);
        report.density.push_back(density_at(pts, p) / total.mass);
    }
    return report;
}

AccelerationSummary acceleration_summary(const SlitReport& report, const NodeSpec& nodes) {
    const NodeGeometry& g = nodes.geometry;
    AccelerationSummary s;
    s.expectation_abs_p = report.expectation_abs_p;
    s.expectation_over_pmax = report.expectation_abs_p / g.p_max;
    const long bits = report.expectation_abs_p.bits();
    const XReal pi_b = XReal::pi(bits);
    s.superosc_momentum_scale =
        g.size() >= 2 ? pi_b * g.hbar / g.min_gap() : g.p_max;
    s.expectation_over_scale = report.expectation_abs_p / s.superosc_momentum_scale;
    s.self_acceleration = report.expectation_abs_p > g.p_max;
    return s;
}

}  // namespace superosc
