#include "superosc/scaling.hpp"

#include <chrono>

namespace superosc {

XReal parse_number(const std::string& text, long bits) {
    if (text == "pi") return XReal::pi(bits);
    if (text == "-pi") return -XReal::pi(bits);
    return XReal::from_string(text, bits);
}

void SweepConfig::validate() const {
    const XReal pm = parse_number(p_max, 64);
    const XReal hb = parse_number(hbar, 64);
    if (!(pm > XReal(0))) throw DomainError("SweepConfig: p_max must be positive");
    if (!(hb > XReal(0))) throw DomainError("SweepConfig: hbar must be positive");
    const XReal half(0.5);
    auto check_ratio = [&](const std::string& s) {
        const XReal r = parse_number(s, 64);
        if (!(r > XReal(0)) || !(r < half))
            throw DomainError("SweepConfig: every dx must satisfy 0 < dx < lambda_min/2");
    };
    if (mode == SweepMode::FixedNVaryDx) {
        if (fixed_n < 1) throw DomainError("SweepConfig: fixed_n must be >= 1");
        if (dx_ratio_grid.size() < 4)
            throw DomainError("SweepConfig: grid needs at least 4 points for regression");
        for (const std::string& s : dx_ratio_grid) check_ratio(s);
    } else {
        check_ratio(fixed_dx_ratio);
        if (n_grid.size() < 4)
            throw DomainError("SweepConfig: grid needs at least 4 points for regression");
        for (size_t i = 0; i < n_grid.size(); ++i) {
            if (n_grid[i] < 2) throw DomainError("SweepConfig: every N must be >= 2");
            if (i > 0 && n_grid[i] <= n_grid[i - 1])
                throw DomainError("SweepConfig: N grid must be ascending");
        }
    }
}

FitResult fit_line(const std::vector<XReal>& xs, const std::vector<XReal>& ys) {
    const size_t n = xs.size();
    if (n < 2 || ys.size() != n) throw DomainError("fit_line: need >= 2 paired points");
    long bits = 64;
    for (const XReal& x : xs) bits = std::max(bits, x.bits());
    const XReal num_n = XReal::from_long(static_cast<long>(n), bits);
    XReal sx = XReal::zero(bits), sy = XReal::zero(bits);
    XReal sxx = XReal::zero(bits), sxy = XReal::zero(bits);
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    FitResult fit;
    fit.slope = (num_n * sxy - sx * sy) / (num_n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / num_n;
    const XReal ybar = sy / num_n;
    XReal ss_tot = XReal::zero(bits), ss_res = XReal::zero(bits), worst = XReal::zero(bits);
    for (size_t i = 0; i < n; ++i) {
        const XReal pred = fit.slope * xs[i] + fit.intercept;
        const XReal r = ys[i] - pred;
        ss_res += r * r;
        ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
        worst = max(worst, abs(r));
    }
    fit.r_squared = ss_tot.is_zero() ? XReal(1) : XReal(1) - ss_res / ss_tot;
    fit.max_abs_residual = worst;
    fit.points_used = static_cast<long>(n);
    return fit;
}

namespace {

// One grid point: build the prolate matrix at its own precision budget and
// extract s_min.
SweepPoint sweep_point(long n, const std::string& ratio_str, const SweepConfig& cfg) {
    SweepPoint pt;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const XReal ratio64 = parse_number(ratio_str, 64);
        const long bits = cfg.bits_override > 0
                              ? cfg.bits_override
                              : estimate_required_bits(n, ratio64) + cfg.guard_bits;
        PrecisionContext ctx(bits, cfg.guard_bits);
        const XReal p_max = parse_number(cfg.p_max, bits);
        const XReal hbar = parse_number(cfg.hbar, bits);
        const XReal lambda = XReal(2) * ctx.pi() * hbar / p_max;
        const XReal dx = parse_number(ratio_str, bits) * lambda;
        NodeGeometry geom = NodeGeometry::equispaced(n, dx, p_max, hbar);
        ProlateMatrix prolate = build_prolate(geom, ctx);
        if (n == 1) {
            pt.s_min = prolate.matrix()(0, 0);
        } else {
            pt.s_min = smallest_eigenpair(prolate).first;
        }
        pt.bits_used = bits;
        pt.ok = true;
    } catch (const Error& e) {
        pt.error = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    pt.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    return pt;
}

}  // namespace

ScalingReport sweep_dx(const SweepConfig& cfg) {
    cfg.validate();
    if (cfg.mode != SweepMode::FixedNVaryDx)
        throw DomainError("sweep_dx: config mode must be fixed_N_vary_dx");
    ScalingReport report;
    report.mode = cfg.mode;
    report.complete = true;

    for (const std::string& ratio : cfg.dx_ratio_grid) {
        SweepPoint pt = sweep_point(cfg.fixed_n, ratio, cfg);
        pt.parameter = parse_number(ratio, 64);
        if (!pt.ok) report.complete = false;
        report.points.push_back(std::move(pt));
    }

    // The polynomial law is asymptotic; fit only the smallest grid decade.
    XReal min_ratio{0};
    bool have = false;
    for (const SweepPoint& pt : report.points)
        if (pt.ok && (!have || pt.parameter < min_ratio)) {
            min_ratio = pt.parameter;
            have = true;
        }
    std::vector<XReal> xs, ys;
    if (have) {
        const XReal decade_top = min_ratio * XReal(10);
        for (const SweepPoint& pt : report.points) {
            if (!pt.ok || pt.parameter > decade_top) continue;
            xs.push_back(log(pt.parameter));
            ys.push_back(log(pt.s_min));
        }
    }
    if (xs.size() >= 2) {
        report.fit = fit_line(xs, ys);
        report.exponent_or_gamma = report.fit.slope;
    } else {
        report.complete = false;
    }
    return report;
}

ScalingReport sweep_n(const SweepConfig& cfg, bool sqrt_n_correction) {
    cfg.validate();
    if (cfg.mode != SweepMode::FixedDxVaryN)
        throw DomainError("sweep_n: config mode must be fixed_dx_vary_N");
    ScalingReport report;
    report.mode = cfg.mode;
    report.complete = true;

    for (long n : cfg.n_grid) {
        SweepPoint pt = sweep_point(n, cfg.fixed_dx_ratio, cfg);
        pt.parameter = XReal(n);
        if (!pt.ok) report.complete = false;
        report.points.push_back(std::move(pt));
    }

    std::vector<XReal> xs, ys;
    for (const SweepPoint& pt : report.points) {
        if (!pt.ok) continue;
        xs.push_back(pt.parameter);
        XReal y = log(pt.s_min);
        if (sqrt_n_correction) y -= log(pt.parameter) / XReal(2);
        ys.push_back(std::move(y));
    }
    if (xs.size() >= 2) {
        report.fit = fit_line(xs, ys);
        report.exponent_or_gamma = -report.fit.slope;
    } else {
        report.complete = false;
    }
    return report;
}

}  // namespace superosc
