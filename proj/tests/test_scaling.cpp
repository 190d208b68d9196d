#include <doctest.h>

#include "superosc/scaling.hpp"

using namespace superosc;

namespace {

SweepConfig dx_config(long n, std::vector<std::string> grid) {
    SweepConfig cfg;
    cfg.mode = SweepMode::FixedNVaryDx;
    cfg.fixed_n = n;
    cfg.dx_ratio_grid = std::move(grid);
    return cfg;
}

SweepConfig n_config(const std::string& ratio, std::vector<long> ns) {
    SweepConfig cfg;
    cfg.mode = SweepMode::FixedDxVaryN;
    cfg.fixed_dx_ratio = ratio;
    cfg.n_grid = std::move(ns);
    return cfg;
}

}  // namespace

TEST_SUITE("scaling") {

TEST_CASE("parse_number handles pi and decimal strings") {
    CHECK(parse_number("pi", 128) == XReal::pi(128));
    CHECK(parse_number("-pi", 64) == -XReal::pi(64));
    CHECK(parse_number("2.5e-3", 96) == XReal::from_string("0.0025", 96));
}

TEST_CASE("fit_line recovers an exact line") {
    std::vector<XReal> xs{XReal(1), XReal(2), XReal(3), XReal(4)};
    std::vector<XReal> ys;
    for (const XReal& x : xs) ys.push_back(XReal(-3) * x + XReal(7));
    FitResult fit = fit_line(xs, ys);
    CHECK(abs(fit.slope + XReal(3)) <= XReal::pow2(-58));
    CHECK(abs(fit.intercept - XReal(7)) <= XReal::pow2(-56));
    CHECK(abs(fit.r_squared - XReal(1)) <= XReal::pow2(-50));
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(sweep_dx(dx_config(0, {"0.2", "0.1", "0.05", "0.025"})), DomainError);
    CHECK_THROWS_AS(sweep_dx(dx_config(2, {"0.2", "0.1"})), DomainError);
    CHECK_THROWS_AS(sweep_dx(dx_config(2, {"0.6", "0.2", "0.1", "0.05"})), DomainError);
    SweepConfig wrong = dx_config(2, {"0.2", "0.1", "0.05", "0.025"});
    CHECK_THROWS_AS(sweep_n(wrong), DomainError);
    CHECK_THROWS_AS(sweep_n(n_config("0.1", {4, 5, 6})), DomainError);
    CHECK_THROWS_AS(sweep_n(n_config("0.1", {4, 5, 5, 6})), DomainError);
    CHECK_THROWS_AS(sweep_n(n_config("0.1", {1, 2, 3, 4})), DomainError);
}

TEST_CASE("N=1 spacing sweep is flat") {
    ScalingReport r = sweep_dx(dx_config(1, {"0.2", "0.1", "0.05", "0.025"}));
    CHECK(r.complete);
    for (const SweepPoint& pt : r.points) {
        CHECK(pt.ok);
        CHECK(abs(pt.s_min - XReal(1)) <= XReal::pow2(-50));
        CHECK(pt.bits_used == 64 + 32);
    }
    CHECK(abs(r.exponent_or_gamma) <= XReal(0.001));
}

TEST_CASE("N=2 sweep reproduces the quadratic spacing law") {
    ScalingReport r = sweep_dx(dx_config(2, {"0.2", "0.1", "0.05", "0.025"}));
    CHECK(r.complete);
    // alpha within 10% of 2(N-1) = 2
    CHECK(abs(r.exponent_or_gamma - XReal(2)) / XReal(2) <= XReal(0.1));
    // frozen from the oracle run on this exact grid
    CHECK(abs(r.exponent_or_gamma - XReal::from_string("1.9641618", 64)) <= XReal(1e-4));
    // closed form: s_min = 1 - sinc(pi dx); check the 0.1 lambda point (dx = 0.2)
    const XReal dx = XReal::from_string("0.2", 192);
    const XReal pi_b = XReal::pi(192);
    const XReal want = XReal(1) - sin(pi_b * dx) / (pi_b * dx);
    bool found = false;
    for (const SweepPoint& pt : r.points)
        if (pt.parameter == XReal::from_string("0.1", 64)) {
            CHECK(abs(pt.s_min - want) / want <= XReal(1e-20));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("s_min decreases monotonically in both sweep directions") {
    ScalingReport rd = sweep_dx(dx_config(3, {"0.2", "0.1", "0.05", "0.025"}));
    for (size_t i = 1; i < rd.points.size(); ++i)
        CHECK(rd.points[i].s_min < rd.points[i - 1].s_min);
    ScalingReport rn = sweep_n(n_config("0.1", {4, 5, 6, 7, 8}));
    for (size_t i = 1; i < rn.points.size(); ++i)
        CHECK(rn.points[i].s_min < rn.points[i - 1].s_min);
}

TEST_CASE("N sweep yields a positive gamma with a tight log-linear fit") {
    ScalingReport r = sweep_n(n_config("0.1", {4, 6, 8, 10, 12}));
    CHECK(r.complete);
    CHECK(r.exponent_or_gamma > XReal(0));
    CHECK(r.fit.r_squared > XReal::from_string("0.999", 64));
    // oracle run: gamma(0.1 lambda_min) ~ 3.68
    CHECK(abs(r.exponent_or_gamma - XReal::from_string("3.68", 64)) <= XReal(0.15));
}

TEST_CASE("sqrt(N) model correction reduces residuals") {
    SweepConfig cfg = n_config("0.1", {4, 6, 8, 10, 12});
    ScalingReport with = sweep_n(cfg, true);
    ScalingReport without = sweep_n(cfg, false);
    CHECK(with.fit.max_abs_residual < without.fit.max_abs_residual);
}

TEST_CASE("gamma grows as the spacing shrinks") {
    ScalingReport tight = sweep_n(n_config("0.05", {4, 5, 6, 7, 8}));
    ScalingReport loose = sweep_n(n_config("0.2", {4, 5, 6, 7, 8}));
    CHECK(tight.exponent_or_gamma > loose.exponent_or_gamma);
}

TEST_CASE("failed points flag an incomplete report") {
    SweepConfig cfg = n_config("0.1", {4, 8, 12, 16});
    cfg.bits_override = 64;  // hopeless for N = 16 at this spacing
    ScalingReport r = sweep_n(cfg);
    CHECK_FALSE(r.complete);
    bool any_failed = false;
    for (const SweepPoint& pt : r.points)
        if (!pt.ok) {
            any_failed = true;
            CHECK(pt.error.find("precision") != std::string::npos);
        }
    CHECK(any_failed);
}

}  // TEST_SUITE scaling
