#include "superosc/serialize.hpp"

#include <sstream>

namespace superosc {

using nlohmann::json;

namespace {

json complex_to_json(const XComplex& z) {
    return json::array({z.re.to_string(), z.im.to_string()});
}

XComplex complex_from_json(const json& j, long bits) {
    if (j.is_string()) return XComplex(XReal::from_string(j.get<std::string>(), bits));
    return XComplex(XReal::from_string(j.at(0).get<std::string>(), bits),
                    XReal::from_string(j.at(1).get<std::string>(), bits));
}

std::string fmt(const XReal& v, int digits) {
    return digits > 0 ? v.to_string(digits) : v.to_string();
}

}  // namespace

json wavefunction_to_json(const Wavefunction& w) {
    const NodeGeometry& g = w.geometry();
    json xs = json::array(), amps = json::array(), coeffs = json::array();
    for (Index i = 0; i < g.size(); ++i) {
        xs.push_back(g.xs[i].to_string());
        amps.push_back(complex_to_json(w.nodes().amps[i]));
        coeffs.push_back(complex_to_json(w.coeffs()[i]));
    }
    return json{{"format", "superosc-wavefunction"},
                {"version", 1},
                {"precision_bits", w.bits()},
                {"nodes", json{{"xs", xs}, {"p_max", g.p_max.to_string()},
                               {"hbar", g.hbar.to_string()}}},
                {"amps", amps},
                {"coeffs", coeffs},
                {"norm_sq", w.norm_sq().to_string()}};
}

Wavefunction wavefunction_from_json(const json& doc) {
    if (doc.value("format", "") != "superosc-wavefunction")
        throw DomainError("wavefunction_from_json: not a wavefunction document");
    const long bits = doc.at("precision_bits").get<long>();
    if (bits < 64) throw DomainError("wavefunction_from_json: precision_bits must be >= 64");
    PrecisionContext ctx(bits);

    const json& jn = doc.at("nodes");
    const json& jxs = jn.at("xs");
    NodeGeometry geom;
    geom.xs = XVec(static_cast<Index>(jxs.size()));
    for (Index i = 0; i < geom.xs.size(); ++i)
        geom.xs[i] = XReal::from_string(jxs.at(static_cast<size_t>(i)).get<std::string>(), bits);
    geom.p_max = XReal::from_string(jn.at("p_max").get<std::string>(), bits);
    geom.hbar = XReal::from_string(jn.at("hbar").get<std::string>(), bits);

    const json& jamps = doc.at("amps");
    const json& jcoeffs = doc.at("coeffs");
    if (jamps.size() != jxs.size() || jcoeffs.size() != jxs.size())
        throw DomainError("wavefunction_from_json: inconsistent array lengths");
    XCVec amps(geom.xs.size()), coeffs(geom.xs.size());
    for (Index i = 0; i < geom.xs.size(); ++i) {
        amps[i] = complex_from_json(jamps.at(static_cast<size_t>(i)), bits);
        coeffs[i] = complex_from_json(jcoeffs.at(static_cast<size_t>(i)), bits);
    }
    XReal norm_sq = XReal::from_string(doc.at("norm_sq").get<std::string>(), bits);

    auto prolate = std::make_shared<const ProlateMatrix>(build_prolate(geom, ctx));
    NodeSpec nodes{std::move(geom), std::move(amps)};
    nodes.validate(bits);
    return Wavefunction(std::move(nodes), std::move(coeffs), std::move(norm_sq),
                        std::move(prolate), bits);
}

std::string wavefunction_samples_csv(const Wavefunction& w, const XReal& lo, const XReal& hi,
                                     long samples_per_gap, int digits) {
    if (!(lo < hi)) throw DomainError("wavefunction_samples_csv: empty interval");
    const NodeGeometry& g = w.geometry();
    const long bits = w.bits();
    const XReal gap = g.size() >= 2 ? g.min_gap() : g.lambda_min();
    long samples = (ceil((hi - lo) / gap).to_long() + 1) * samples_per_gap;
    if (samples < 2) samples = 2;

    std::ostringstream out;
    out << "x,re_psi,im_psi\n";
    for (long i = 0; i <= samples; ++i) {
        const XReal x =
            lo + (hi - lo) * XReal::from_long(i, bits) / XReal::from_long(samples, bits);
        const XComplex v = eval_position(w, x);
        out << fmt(x, digits) << "," << fmt(v.re, digits) << "," << fmt(v.im, digits) << "\n";
    }
    return out.str();
}

std::string scaling_report_csv(const ScalingReport& r, bool include_timings) {
    std::ostringstream out;
    out << "parameter,s_min,bits_used";
    if (include_timings) out << ",wall_time";
    out << "\n";
    for (const SweepPoint& pt : r.points) {
        out << pt.parameter.to_string() << ","
            << (pt.ok ? pt.s_min.to_string() : std::string("failed")) << "," << pt.bits_used;
        if (include_timings) out << "," << pt.wall_seconds;
        out << "\n";
    }
    return out.str();
}

json scaling_report_json(const ScalingReport& r, bool include_timings) {
    json points = json::array();
    for (const SweepPoint& pt : r.points) {
        json p{{"parameter", pt.parameter.to_string()},
               {"bits_used", pt.bits_used},
               {"ok", pt.ok}};
        if (pt.ok)
            p["s_min"] = pt.s_min.to_string();
        else
            p["error"] = pt.error;
        if (include_timings) p["wall_seconds"] = pt.wall_seconds;
        points.push_back(std::move(p));
    }
    return json{{"format", "superosc-scaling-report"},
                {"mode", r.mode == SweepMode::FixedNVaryDx ? "fixed_N_vary_dx" : "fixed_dx_vary_N"},
                {"points", points},
                {"fit",
                 json{{"slope", r.fit.slope.to_string()},
                      {"intercept", r.fit.intercept.to_string()},
                      {"r_squared", r.fit.r_squared.to_string()},
                      {"max_abs_residual", r.fit.max_abs_residual.to_string()},
                      {"points_used", r.fit.points_used}}},
                {"exponent_or_gamma", r.exponent_or_gamma.to_string()},
                {"complete", r.complete}};
}

std::string slit_report_csv(const SlitReport& r, int digits) {
    std::ostringstream out;
    out << "p,density\n";
    for (size_t i = 0; i < r.p_grid.size(); ++i)
        out << fmt(r.p_grid[i], digits) << "," << fmt(r.density[i], digits) << "\n";
    return out.str();
}

json slit_report_json(const SlitReport& r, const AccelerationSummary* summary) {
    json doc{{"format", "superosc-slit-report"},
             {"captured_probability", r.captured_probability.to_string()},
             {"p_grid_max", r.p_grid_max.to_string()},
             {"expectation_abs_p", r.expectation_abs_p.to_string()},
             {"fraction_above_cutoff", r.fraction_above_cutoff.to_string()},
             {"mass_in_grid", r.mass_in_grid.to_string()},
             {"tail_bound", r.tail_bound.to_string()},
             {"quadrature_error_estimate", r.quadrature_error_estimate.to_string()},
             {"n_quad", r.n_quad},
             {"x_panels", r.x_panels},
             {"p_panels", r.p_panels},
             {"whole_line_fast_path", r.whole_line_fast_path}};
    if (summary != nullptr) {
        doc["acceleration"] = json{
            {"expectation_abs_p", summary->expectation_abs_p.to_string()},
            {"expectation_over_pmax", summary->expectation_over_pmax.to_string()},
            {"superosc_momentum_scale", summary->superosc_momentum_scale.to_string()},
            {"expectation_over_scale", summary->expectation_over_scale.to_string()},
            {"self_acceleration", summary->self_acceleration}};
    }
    return doc;
}

}  // namespace superosc
