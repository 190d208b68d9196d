// Command-line front end: synthesize superoscillating wave functions, run
// the spacing/count scaling sweeps, simulate the single-slit momentum
// boost, and verify the cross-module invariants. All numeric parameters
// are decimal strings so extended precision survives end to end.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superosc/serialize.hpp"

using namespace superosc;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file: " + path);
    f << content;
    if (!f) throw DomainError("failed writing output file: " + path);
}

// JSON config file supplying defaults; explicit flags win.
struct ConfigDefaults {
    json doc = json::object();

    void load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw DomainError("cannot open config file: " + path);
        f >> doc;
    }
    std::string str(const char* key, std::string fallback) const {
        if (!doc.contains(key)) return fallback;
        const json& v = doc.at(key);
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }
    long num(const char* key, long fallback) const {
        if (!doc.contains(key)) return fallback;
        const json& v = doc.at(key);
        return v.is_string() ? std::stol(v.get<std::string>()) : v.get<long>();
    }
    bool flag(const char* key, bool fallback) const {
        return doc.contains(key) ? doc.at(key).get<bool>() : fallback;
    }
};

long env_default_bits() {
    const char* v = std::getenv("SUPEROSC_PRECISION_BITS");
    if (v == nullptr) return 0;
    return std::stol(v);
}

struct GeometryArgs {
    long n = 0;
    std::string dx;     // absolute spacing, decimal string
    std::string nodes;  // explicit comma list, overrides n/dx
    std::string pmax = "pi";
    std::string hbar = "1";
    long bits = 0;  // 0 = auto
    long guard = 32;
};

long resolve_bits(const GeometryArgs& ga, long n, const XReal& min_gap_ratio64) {
    if (ga.bits > 0) return ga.bits;
    const long env_bits = env_default_bits();
    if (env_bits > 0) return env_bits;
    // spacing at or above Nyquist needs no extra precision; force the floor
    return estimate_required_bits(n, min_gap_ratio64, /*force=*/true) + ga.guard;
}

NodeGeometry build_geometry(const GeometryArgs& ga, long bits) {
    const XReal p_max = parse_number(ga.pmax, bits);
    const XReal hbar = parse_number(ga.hbar, bits);
    if (!ga.nodes.empty()) {
        std::vector<std::string> parts = split_list(ga.nodes);
        XVec xs(static_cast<Index>(parts.size()));
        for (size_t i = 0; i < parts.size(); ++i)
            xs[static_cast<Index>(i)] = XReal::from_string(parts[i], bits);
        return {std::move(xs), p_max, hbar};
    }
    if (ga.n < 1 || ga.dx.empty())
        throw DomainError("either --nodes or both --n and --dx are required");
    return NodeGeometry::equispaced(ga.n, XReal::from_string(ga.dx, bits), p_max, hbar);
}

long node_count(const GeometryArgs& ga) {
    if (!ga.nodes.empty()) return static_cast<long>(split_list(ga.nodes).size());
    return std::max<long>(ga.n, 1);
}

// gap/lambda_min at scouting precision, for the bit estimate
XReal scout_ratio(const GeometryArgs& ga) {
    const long bits = 96;
    const XReal p_max = parse_number(ga.pmax, bits);
    const XReal hbar = parse_number(ga.hbar, bits);
    const XReal lambda = XReal(2) * XReal::pi(bits) * hbar / p_max;
    if (!ga.nodes.empty()) {
        std::vector<std::string> parts = split_list(ga.nodes);
        if (parts.size() < 2) return XReal(0.25);
        XReal gap{0};
        for (size_t i = 1; i < parts.size(); ++i) {
            const XReal g =
                XReal::from_string(parts[i], bits) - XReal::from_string(parts[i - 1], bits);
            gap = (i == 1) ? g : min(gap, g);
        }
        return gap / lambda;
    }
    if (ga.n < 2) return XReal(0.25);
    if (ga.dx.empty()) throw DomainError("either --nodes or both --n and --dx are required");
    return XReal::from_string(ga.dx, bits) / lambda;
}

XCVec parse_amps(const std::string& amps, bool alternating, Index n, long bits) {
    XCVec out(n);
    if (!amps.empty()) {
        std::vector<std::string> parts = split_list(amps);
        if (static_cast<Index>(parts.size()) != n)
            throw DomainError("amplitude count must match node count");
        for (size_t i = 0; i < parts.size(); ++i) {
            const std::string& p = parts[i];
            const size_t colon = p.find(':');
            if (colon == std::string::npos) {
                out[static_cast<Index>(i)] = XComplex(XReal::from_string(p, bits));
            } else {
                out[static_cast<Index>(i)] =
                    XComplex(XReal::from_string(p.substr(0, colon), bits),
                             XReal::from_string(p.substr(colon + 1), bits));
            }
        }
        return out;
    }
    if (!alternating && n > 1)
        throw DomainError("provide --amps or use --alt for the (-1)^k pattern");
    for (Index k = 0; k < n; ++k) out[k] = XComplex(XReal(k % 2 == 0 ? 1 : -1));
    return out;
}

void emit_wavefunction(const Wavefunction& w, const std::string& out_json,
                       const std::string& samples_csv, long samples_per_gap, int digits) {
    write_file(out_json, wavefunction_to_json(w).dump(2) + "\n");
    if (!samples_csv.empty()) {
        const NodeGeometry& g = w.geometry();
        const XReal margin = g.lambda_min() / XReal(2);
        write_file(samples_csv,
                   wavefunction_samples_csv(w, g.xs[0] - margin, g.xs[g.size() - 1] + margin,
                                            samples_per_gap, digits));
    }
}

int cmd_synth(const GeometryArgs& ga, const std::string& amps, bool alt,
              const std::string& out_json, const std::string& samples_csv, long samples_per_gap,
              int digits) {
    const long bits = resolve_bits(ga, node_count(ga), scout_ratio(ga));
    PrecisionContext ctx(bits, ga.guard);
    NodeGeometry geom = build_geometry(ga, bits);
    NodeSpec spec{geom, parse_amps(amps, alt, geom.size(), bits)};
    Wavefunction w = synthesize(spec, ctx);
    emit_wavefunction(w, out_json, samples_csv, samples_per_gap, digits);
    std::cout << "synthesized N=" << geom.size() << " at " << bits
              << " bits; norm_sq = " << w.norm_sq().to_string(12) << "\n"
              << "wrote " << out_json << (samples_csv.empty() ? "" : " and " + samples_csv)
              << "\n";
    return 0;
}

int cmd_maximal(const GeometryArgs& ga, const std::string& out_json,
                const std::string& samples_csv, long samples_per_gap, int digits) {
    const long bits = resolve_bits(ga, node_count(ga), scout_ratio(ga));
    PrecisionContext ctx(bits, ga.guard);
    NodeGeometry geom = build_geometry(ga, bits);
    Wavefunction w = maximal_superoscillation(geom, ctx);
    emit_wavefunction(w, out_json, samples_csv, samples_per_gap, digits);
    auto [s_min, v] = smallest_eigenpair(w.prolate());
    (void)v;
    std::cout << "maximal superoscillation N=" << geom.size() << " at " << bits
              << " bits; s_min = " << s_min.to_string(12)
              << ", node amplitude scale = " << sqrt(s_min).to_string(12) << "\n"
              << "wrote " << out_json << (samples_csv.empty() ? "" : " and " + samples_csv)
              << "\n";
    return 0;
}

int emit_scaling(const ScalingReport& report, const std::string& out_csv,
                 const std::string& out_json, bool timings) {
    if (!out_csv.empty()) write_file(out_csv, scaling_report_csv(report, timings));
    if (!out_json.empty()) write_file(out_json, scaling_report_json(report, timings).dump(2) + "\n");
    return report.complete ? 0 : 3;
}

int cmd_sweep_dx(long n, const std::string& grid, const std::string& pmax,
                 const std::string& hbar, long bits, long guard, const std::string& amp_source,
                 const std::string& out_csv, const std::string& out_json, bool timings) {
    SweepConfig cfg;
    cfg.mode = SweepMode::FixedNVaryDx;
    cfg.fixed_n = n;
    cfg.dx_ratio_grid = split_list(grid);
    cfg.p_max = pmax;
    cfg.hbar = hbar;
    cfg.bits_override = bits;
    cfg.guard_bits = guard;
    cfg.amplitude_source =
        amp_source == "alt" ? AmplitudeSource::Alternating : AmplitudeSource::SminEigenvector;
    ScalingReport report = sweep_dx(cfg);
    std::cout << "sweep-dx N=" << n
              << ": fitted s_min exponent alpha = " << report.exponent_or_gamma.to_string(8)
              << " (expect ~" << 2 * (n - 1) << "), R^2 = " << report.fit.r_squared.to_string(8)
              << (report.complete ? "" : " [INCOMPLETE]") << "\n";
    return emit_scaling(report, out_csv, out_json, timings);
}

int cmd_sweep_n(const std::string& dx_ratio, const std::string& ngrid, const std::string& pmax,
                const std::string& hbar, long bits, long guard, const std::string& amp_source,
                const std::string& out_csv, const std::string& out_json, bool timings) {
    SweepConfig cfg;
    cfg.mode = SweepMode::FixedDxVaryN;
    cfg.fixed_dx_ratio = dx_ratio;
    cfg.p_max = pmax;
    cfg.hbar = hbar;
    cfg.bits_override = bits;
    cfg.guard_bits = guard;
    cfg.amplitude_source =
        amp_source == "alt" ? AmplitudeSource::Alternating : AmplitudeSource::SminEigenvector;
    const size_t range = ngrid.find(':');
    if (range != std::string::npos) {
        const long lo = std::stol(ngrid.substr(0, range));
        const long hi = std::stol(ngrid.substr(range + 1));
        for (long k = lo; k <= hi; ++k) cfg.n_grid.push_back(k);
    } else {
        for (const std::string& s : split_list(ngrid)) cfg.n_grid.push_back(std::stol(s));
    }
    ScalingReport report = sweep_n(cfg);
    std::cout << "sweep-n dx=" << dx_ratio
              << " lambda_min: gamma = " << report.exponent_or_gamma.to_string(8)
              << ", R^2 = " << report.fit.r_squared.to_string(8)
              << (report.complete ? "" : " [INCOMPLETE]") << "\n";
    return emit_scaling(report, out_csv, out_json, timings);
}

int cmd_slit(const std::string& from, const std::string& window, const std::string& pgrid,
             long nquad, long density_points, const std::string& out_csv,
             const std::string& out_json, int digits) {
    std::ifstream f(from);
    if (!f) throw DomainError("cannot open wavefunction file: " + from);
    json doc;
    f >> doc;
    Wavefunction w = wavefunction_from_json(doc);
    const long bits = w.bits();

    std::vector<std::string> lohi = split_list(window);
    if (lohi.size() != 2) throw DomainError("--window expects lo,hi");
    SlitWindow win{XReal::from_string(lohi[0], bits), XReal::from_string(lohi[1], bits), &w};

    XReal p_grid_max{0};
    if (!pgrid.empty()) {
        p_grid_max = parse_number(pgrid, bits);
    } else if (w.geometry().size() >= 2) {
        p_grid_max = XReal(4) * XReal::pi(bits) * w.geometry().hbar / w.geometry().min_gap();
    } else {
        p_grid_max = XReal(2) * w.geometry().p_max;
    }

    SlitReport report = truncate_and_transform(win, p_grid_max, nquad, density_points);
    AccelerationSummary summary = acceleration_summary(report, w.nodes());
    if (!out_csv.empty()) write_file(out_csv, slit_report_csv(report, digits));
    if (!out_json.empty()) write_file(out_json, slit_report_json(report, &summary).dump(2) + "\n");
    std::cout << "slit [" << lohi[0] << ", " << lohi[1]
              << "]: captured = " << report.captured_probability.to_string(8)
              << ", <|p|> = " << report.expectation_abs_p.to_string(8)
              << ", fraction beyond cutoff = " << report.fraction_above_cutoff.to_string(8) << "\n"
              << (summary.self_acceleration
                      ? "self-acceleration: momentum expectation exceeds the cutoff\n"
                      : "no self-acceleration at this window\n");
    return 0;
}

// Minimality check shared with `verify`: random bandlimited perturbations
// vanishing at the nodes stay orthogonal to psi and can only grow the norm.
template <typename Report>
void run_minimality(const Wavefunction& psi, const NodeSpec& spec, const PrecisionContext& ctx,
                    long trials, unsigned long seed, Report&& report) {
    const long bits = ctx.bits();
    uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
    auto next = [&]() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    };
    auto uniform = [&](double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return XReal::from_double(lo + (hi - lo) * u, bits);
    };

    const Index n = spec.size();
    const XReal pm = spec.geometry.p_max / spec.geometry.hbar;
    const XReal pi_b = ctx.pi();
    XReal worst_ip{0};
    bool norm_grew = true;
    for (long t = 0; t < trials; ++t) {
        const Index m = 3;
        std::vector<XReal> ys;
        while (static_cast<Index>(ys.size()) < m) {
            XReal y = uniform(-4, 4);
            bool clash = false;
            for (Index r = 0; r < n; ++r)
                if (abs(y - spec.geometry.xs[r]) < XReal(0.2)) clash = true;
            for (const XReal& prev : ys)
                if (abs(y - prev) < XReal(0.2)) clash = true;
            if (!clash) ys.push_back(y);
        }
        std::sort(ys.begin(), ys.end(), [](const XReal& a, const XReal& b) { return a < b; });
        XCVec d(m);
        for (Index j = 0; j < m; ++j) d[j] = XComplex(uniform(-1, 1), uniform(-1, 1));
        XCVec raw(n);
        for (Index k = 0; k < n; ++k) {
            XComplex s = XComplex::zero(bits);
            for (Index j = 0; j < m; ++j) {
                const XReal u = spec.geometry.xs[k] - ys[static_cast<size_t>(j)];
                s += d[j] * (sin(u * pm) / (pi_b * u));
            }
            raw[k] = s;
        }
        XCVec b = psi.prolate().cholesky().solve(raw);
        std::vector<std::pair<XReal, XComplex>> terms;
        for (Index j = 0; j < m; ++j) terms.push_back({ys[static_cast<size_t>(j)], d[j]});
        for (Index r = 0; r < n; ++r) terms.push_back({spec.geometry.xs[r], -b[r]});
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& c) { return a.first < c.first; });
        XVec gx(static_cast<Index>(terms.size()));
        XCVec gc(static_cast<Index>(terms.size()));
        for (size_t i = 0; i < terms.size(); ++i) {
            gx[static_cast<Index>(i)] = terms[i].first;
            gc[static_cast<Index>(i)] = terms[i].second;
        }
        Wavefunction g = Wavefunction::from_coefficients(
            NodeGeometry{gx, spec.geometry.p_max, spec.geometry.hbar}, gc, ctx);
        const XComplex ip = inner_product(psi, g);
        const XReal rel = abs(ip) / (sqrt(psi.norm_sq()) * sqrt(g.norm_sq()));
        worst_ip = max(worst_ip, rel);
        const XReal grown = psi.norm_sq() + XReal(2) * ip.re + g.norm_sq();
        if (grown < psi.norm_sq()) norm_grew = false;
    }
    report("orthogonality of node-vanishing perturbations",
           worst_ip <= XReal::pow2(-ctx.bits() / 3),
           "worst normalized inner product " + worst_ip.to_string(6) + " over " +
               std::to_string(trials) + " trials");
    report("norm minimality", norm_grew, "||psi + g||^2 >= ||psi||^2 in every trial");
}

int cmd_verify(const GeometryArgs& ga, long trials, unsigned long seed) {
    const long bits = resolve_bits(ga, node_count(ga), scout_ratio(ga));
    PrecisionContext ctx(bits, ga.guard);
    NodeGeometry geom = build_geometry(ga, bits);
    XCVec amps(geom.size());
    for (Index k = 0; k < geom.size(); ++k) amps[k] = XComplex(XReal(k % 2 == 0 ? 1 : -1));
    NodeSpec spec{geom, amps};
    Wavefunction psi = synthesize(spec, ctx);
    std::cout << "verify: N=" << geom.size() << ", " << bits << " bits\n";

    int failures = 0;
    auto report = [&](const char* name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << name << ": " << detail << "\n";
        if (!ok) ++failures;
    };

    {
        const SymEigen& eig = psi.prolate().spectrum();
        const XReal cond = eig.values[geom.size() - 1] / eig.values[0];
        XReal worst = XReal::zero(bits);
        for (Index k = 0; k < geom.size(); ++k)
            worst = max(worst, abs(eval_position(psi, geom.xs[k]) - amps[k]));
        const XReal tol = XReal(1000) * ctx.eps() * max_abs(amps) * cond;
        report("interpolation exactness", worst <= tol,
               "max residual " + worst.to_string(6) + " vs tol " + tol.to_string(6));
    }
    {
        const XReal par = norm_sq_momentum(psi);
        const XReal rel = abs(par - psi.norm_sq()) / psi.norm_sq();
        report("parseval agreement", rel <= XReal(1e-8), "relative deviation " + rel.to_string(6));
    }
    run_minimality(psi, spec, ctx, trials, seed, report);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superoscillation laboratory: minimum-norm bandlimited synthesis, "
                 "scaling laws, and single-slit momentum transfer"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    ConfigDefaults cfg;
    try {
        for (int i = 1; i + 1 < argc; ++i)
            if (std::string(argv[i]) == "--config") cfg.load(argv[i + 1]);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file providing parameter defaults");

    GeometryArgs ga;
    ga.n = cfg.num("n", 0);
    ga.dx = cfg.str("dx", "");
    ga.nodes = cfg.str("nodes", "");
    ga.pmax = cfg.str("pmax", "pi");
    ga.hbar = cfg.str("hbar", "1");
    ga.bits = cfg.num("bits", 0);
    ga.guard = cfg.num("guard_bits", 32);

    std::string amps = cfg.str("amps", "");
    bool alt = cfg.flag("alt", false);
    std::string out_json = cfg.str("out", "wavefunction.json");
    std::string samples_csv = cfg.str("samples_csv", "");
    long samples_per_gap = cfg.num("samples_per_gap", 512);
    int digits = static_cast<int>(cfg.num("digits", 0));

    auto add_geometry = [&](CLI::App* sub) {
        sub->add_option("--n", ga.n, "number of equispaced nodes");
        sub->add_option("--dx", ga.dx, "node spacing (absolute decimal string)");
        sub->add_option("--nodes", ga.nodes, "explicit node positions, comma separated");
        sub->add_option("--pmax", ga.pmax, "momentum cutoff ('pi' or decimal)");
        sub->add_option("--hbar", ga.hbar, "reduced Planck constant");
        sub->add_option("--bits", ga.bits, "working precision override (0 = auto estimate)");
        sub->add_option("--guard-bits", ga.guard, "extra bits beyond the estimate");
    };

    CLI::App* synth = app.add_subcommand("synth", "minimum-norm interpolant for given amplitudes");
    add_geometry(synth);
    synth->add_option("--amps", amps, "amplitudes: re or re:im, comma separated");
    synth->add_flag("--alt", alt, "alternating (-1)^k amplitudes");
    synth->add_option("--out", out_json, "wavefunction JSON path");
    synth->add_option("--samples-csv", samples_csv, "CSV of sampled psi(x)");
    synth->add_option("--samples-per-gap", samples_per_gap, "samples per node gap");
    synth->add_option("--digits", digits, "truncate auxiliary CSV columns (0 = full)");

    CLI::App* maximal =
        app.add_subcommand("maximal", "largest-amplitude normalized superoscillation");
    add_geometry(maximal);
    maximal->add_option("--out", out_json, "wavefunction JSON path");
    maximal->add_option("--samples-csv", samples_csv, "CSV of sampled psi(x)");
    maximal->add_option("--samples-per-gap", samples_per_gap, "samples per node gap");
    maximal->add_option("--digits", digits, "truncate auxiliary CSV columns (0 = full)");

    std::string grid = cfg.str("grid", "");
    std::string ngrid = cfg.str("n_grid", "");
    std::string dx_ratio = cfg.str("dx_ratio", "");
    std::string amp_source = cfg.str("amp_source", "smin");
    std::string out_csv = cfg.str("out_csv", "");
    std::string out_json_report = cfg.str("out_json", "");
    bool timings = cfg.flag("timings", false);

    CLI::App* sweepdx = app.add_subcommand("sweep-dx", "s_min vs spacing at fixed N");
    sweepdx->add_option("--n", ga.n, "node count");
    sweepdx->add_option("--grid", grid, "spacings as fractions of lambda_min, comma separated");
    sweepdx->add_option("--pmax", ga.pmax, "momentum cutoff");
    sweepdx->add_option("--hbar", ga.hbar, "reduced Planck constant");
    sweepdx->add_option("--bits", ga.bits, "fixed precision override (0 = per point)");
    sweepdx->add_option("--guard-bits", ga.guard, "guard bits on the per-point estimate");
    sweepdx->add_option("--amp-source", amp_source, "smin | alt (report metadata)");
    sweepdx->add_option("--out-csv", out_csv, "CSV output path");
    sweepdx->add_option("--out-json", out_json_report, "JSON output path");
    sweepdx->add_flag("--timings", timings, "include wall_time column (breaks determinism)");

    CLI::App* sweepn = app.add_subcommand("sweep-n", "s_min vs node count at fixed spacing");
    sweepn->add_option("--dx", dx_ratio, "spacing as a fraction of lambda_min");
    sweepn->add_option("--n-grid", ngrid, "counts: lo:hi range or comma list");
    sweepn->add_option("--pmax", ga.pmax, "momentum cutoff");
    sweepn->add_option("--hbar", ga.hbar, "reduced Planck constant");
    sweepn->add_option("--bits", ga.bits, "fixed precision override (0 = per point)");
    sweepn->add_option("--guard-bits", ga.guard, "guard bits on the per-point estimate");
    sweepn->add_option("--amp-source", amp_source, "smin | alt (report metadata)");
    sweepn->add_option("--out-csv", out_csv, "CSV output path");
    sweepn->add_option("--out-json", out_json_report, "JSON output path");
    sweepn->add_flag("--timings", timings, "include wall_time column (breaks determinism)");

    std::string from_wf = cfg.str("from_wavefunction", "");
    std::string window = cfg.str("window", "");
    std::string pgrid = cfg.str("pgrid_max", "");
    long nquad = cfg.num("nquad", 16);
    long density_points = cfg.num("density_points", 512);

    CLI::App* slit = app.add_subcommand("slit", "window a wave function and transform");
    CLI::Option* from_opt =
        slit->add_option("--from-wavefunction", from_wf, "wavefunction JSON from synth/maximal");
    CLI::Option* window_opt = slit->add_option("--window", window, "slit interval lo,hi");
    if (from_wf.empty()) from_opt->required();
    if (window.empty()) window_opt->required();
    slit->add_option("--pgrid-max", pgrid, "momentum grid half-width (default 4 pi hbar/gap)");
    slit->add_option("--nquad", nquad, "Gauss-Legendre order per panel");
    slit->add_option("--density-points", density_points, "points in the density CSV grid");
    slit->add_option("--out-csv", out_csv, "density CSV path");
    slit->add_option("--out-json", out_json_report, "summary JSON path");
    slit->add_option("--digits", digits, "truncate CSV columns (0 = full)");

    long trials = cfg.num("trials", 20);
    unsigned long seed = static_cast<unsigned long>(cfg.num("seed", 12345));
    CLI::App* verify = app.add_subcommand("verify", "cross-module invariant suite");
    add_geometry(verify);
    verify->add_option("--trials", trials, "random perturbation count");
    verify->add_option("--seed", seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed())
            return cmd_synth(ga, amps, alt, out_json, samples_csv, samples_per_gap, digits);
        if (maximal->parsed())
            return cmd_maximal(ga, out_json, samples_csv, samples_per_gap, digits);
        if (sweepdx->parsed())
            return cmd_sweep_dx(ga.n, grid, ga.pmax, ga.hbar, ga.bits, ga.guard, amp_source,
                                out_csv, out_json_report, timings);
        if (sweepn->parsed())
            return cmd_sweep_n(dx_ratio, ngrid, ga.pmax, ga.hbar, ga.bits, ga.guard, amp_source,
                               out_csv, out_json_report, timings);
        if (slit->parsed())
            return cmd_slit(from_wf, window, pgrid, nquad, density_points, out_csv,
                            out_json_report, digits);
        if (verify->parsed()) return cmd_verify(ga, trials, seed);
    } catch (const QuadratureError& e) {
        std::cerr << "error: " << e.what() << " (suggested n_quad: " << e.required_n_quad << ")\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
