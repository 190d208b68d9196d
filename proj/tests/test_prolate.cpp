#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "superosc/prolate.hpp"

using namespace superosc;

namespace {

NodeGeometry equispaced_pi(Index n, const char* dx_str, long bits) {
    return NodeGeometry::equispaced(n, XReal::from_string(dx_str, bits), XReal::pi(bits),
                                    XReal::from_long(1, bits));
}

}  // namespace

TEST_SUITE("prolate") {

TEST_CASE("single node gives S = [p_max/(pi hbar)]") {
    PrecisionContext ctx(128);
    ProlateMatrix p = build_prolate(equispaced_pi(1, "1", 128), ctx);
    CHECK(abs(p.matrix()(0, 0) - XReal(1)) <= XReal::pow2(-124));
}

TEST_CASE("Nyquist spacing zeroes the off-diagonal") {
    PrecisionContext ctx(128);
    ProlateMatrix p = build_prolate(equispaced_pi(2, "1", 128), ctx);
    CHECK(abs(p.matrix()(0, 0) - XReal(1)) <= XReal::pow2(-124));
    CHECK(abs(p.matrix()(1, 0)) <= XReal::pow2(-120));
}

TEST_CASE("half-Nyquist off-diagonal is 2/pi") {
    PrecisionContext ctx(200);
    ProlateMatrix p = build_prolate(equispaced_pi(2, "0.5", 200), ctx);
    const XReal two_over_pi = XReal(2) / ctx.pi();
    CHECK(abs(p.matrix()(1, 0) - two_over_pi) <= XReal::pow2(-190));
    // sanity against the quoted decimal
    CHECK(abs(p.matrix()(1, 0) - XReal::from_string("0.6366198", 64)) <= XReal(1e-7));
}

TEST_CASE("diagonal limit is analytic, not a 0/0 evaluation") {
    // p_max and hbar chosen so p_max/(pi hbar) is awkward for naive limits
    PrecisionContext ctx(160);
    NodeGeometry g = NodeGeometry::equispaced(3, ctx.make(0.375), ctx.parse("2.5"), ctx.parse("0.75"));
    ProlateMatrix p = build_prolate(g, ctx);
    const XReal want = ctx.parse("2.5") / (ctx.pi() * ctx.parse("0.75"));
    for (Index k = 0; k < 3; ++k) CHECK(abs(p.matrix()(k, k) - want) <= XReal::pow2(-150));
}

TEST_CASE("coincident and nearly coincident nodes are rejected") {
    PrecisionContext ctx(128);
    XVec xs(2);
    xs[0] = XReal(1);
    xs[1] = XReal(1);
    NodeGeometry dup{xs, XReal::pi(128), XReal(1)};
    CHECK_THROWS_WITH_AS(build_prolate(dup, ctx), doctest::Contains("coincident"), DomainError);

    XVec near(2);
    near[0] = XReal(0);
    near[1] = XReal::pow2(-70);  // far below 2^(-64) * lambda_min
    NodeGeometry nearly{near, XReal::pi(128), XReal(1)};
    CHECK_THROWS_WITH_AS(build_prolate(nearly, ctx), doctest::Contains("coincident"), DomainError);

    XVec decr(2);
    decr[0] = XReal(1);
    decr[1] = XReal(0);
    NodeGeometry unordered{decr, XReal::pi(128), XReal(1)};
    CHECK_THROWS_AS(build_prolate(unordered, ctx), DomainError);
}

TEST_CASE("smallest eigenpair at Nyquist spacing") {
    PrecisionContext ctx(128);
    ProlateMatrix p = build_prolate(equispaced_pi(2, "1", 128), ctx);
    auto [s_min, v] = smallest_eigenpair(p);
    CHECK(abs(s_min - XReal(1)) <= XReal::pow2(-110));
    // sign rule: the largest-magnitude entry is positive
    Index imax = abs(v[0]) >= abs(v[1]) ? 0 : 1;
    CHECK(v[imax] > XReal(0));
    XReal norm = sqrt(v[0] * v[0] + v[1] * v[1]);
    CHECK(abs(norm - XReal(1)) <= XReal::pow2(-110));
}

TEST_CASE("smallest eigenpair of the 2x2 half-Nyquist matrix is 1 - 2/pi") {
    PrecisionContext ctx(200);
    ProlateMatrix p = build_prolate(equispaced_pi(2, "0.5", 200), ctx);
    auto [s_min, v] = smallest_eigenpair(p);
    CHECK(abs(s_min - (XReal(1) - XReal(2) / ctx.pi())) <= XReal::pow2(-190));
    CHECK(abs(s_min - XReal::from_string("0.3633802276324186569244649465099425518622", 200)) <=
          XReal(1e-38));
    // eigenvector (1,-1)/sqrt(2); deterministic sign picks the +1 first
    const XReal inv_sqrt2 = XReal(1) / sqrt(XReal::from_long(2, 200));
    CHECK(abs(v[0] - inv_sqrt2) <= XReal::pow2(-180));
    CHECK(abs(v[1] + inv_sqrt2) <= XReal::pow2(-180));
}

TEST_CASE("N=5 s_min matches the inertia-bisection oracle at 512 bits") {
    PrecisionContext ctx(512);
    ProlateMatrix p = build_prolate(equispaced_pi(5, "0.1", 512), ctx);
    auto [s_min, v] = smallest_eigenpair(p);
    const XReal ref = oracle::smallest_eigenvalue_bisect(p.matrix());
    CHECK(abs(s_min - ref) <= XReal::pow2(-460) * p.matrix().norm_inf());
    // independently computed reference digits
    const XReal frozen = XReal::from_string(
        "8.0081026324782508518353907297369706905683338717773e-9", 512);
    CHECK(abs(s_min - frozen) / frozen <= XReal(1e-45));
    XVec sv = p.matrix().apply(v);
    for (Index i = 0; i < 5; ++i) CHECK(abs(sv[i] - s_min * v[i]) <= XReal::pow2(-480));
}

TEST_CASE("precision exhaustion raises instead of returning noise") {
    // N=10 at dx = 0.05 lambda_min needs ~142 bits; 64 is hopeless
    PrecisionContext ctx(64);
    ProlateMatrix p = build_prolate(equispaced_pi(10, "0.1", 64), ctx);
    CHECK_THROWS_WITH_AS(smallest_eigenpair(p), doctest::Contains("precision exhausted"),
                         PrecisionError);
}

TEST_CASE("quadratic form against eigen algebra") {
    PrecisionContext ctx(256);
    ProlateMatrix p = build_prolate(equispaced_pi(2, "1", 256), ctx);
    XCVec e0(2);
    e0[0] = XComplex(XReal(1));
    e0[1] = XComplex(XReal(0));
    CHECK(abs(quadratic_form_inv(p, e0) - XReal(1)) <= XReal::pow2(-240));

    ProlateMatrix q = build_prolate(equispaced_pi(2, "0.5", 256), ctx);
    auto [s_min, v] = smallest_eigenpair(q);
    CHECK(abs(quadratic_form_inv(q, to_complex(v)) - XReal(1) / s_min) * s_min <=
          XReal::pow2(-240));

    XCVec pm(2);
    pm[0] = XComplex(XReal(1));
    pm[1] = XComplex(XReal(-1));
    const XReal want = XReal(2) / (XReal(1) - XReal(2) / ctx.pi());
    CHECK(abs(quadratic_form_inv(q, pm) - want) <= XReal::pow2(-240));
    CHECK(abs(quadratic_form_inv(q, pm) -
              XReal::from_string("5.503876787768217322407819403022907758501", 256)) <=
          XReal(1e-38));
}

TEST_CASE("positive definiteness for random node sets") {
    oracle::Rng rng(1234);
    for (int trial = 0; trial < 6; ++trial) {
        const Index n = 2 + static_cast<Index>(rng.next() % 11);  // up to 12
        const long bits = 320;
        // random strictly increasing nodes with gaps in [0.02, 1.0] lambda units
        XVec xs(n);
        XReal x = rng.uniform(XReal(-1), XReal(1), bits);
        for (Index i = 0; i < n; ++i) {
            xs[i] = x;
            x += rng.uniform(XReal::from_string("0.04", bits), XReal(2), bits);
        }
        NodeGeometry g{xs, XReal::pi(bits), XReal::from_long(1, bits)};
        PrecisionContext ctx(bits);
        ProlateMatrix p = build_prolate(g, ctx);
        const SymEigen& eig = p.spectrum();
        for (Index i = 0; i < n; ++i) CHECK(eig.values[i] > XReal(0));
    }
}

TEST_CASE("quadratic form equals the spectral sum") {
    oracle::Rng rng(77);
    const long bits = 320;
    PrecisionContext ctx(bits);
    ProlateMatrix p = build_prolate(equispaced_pi(6, "0.25", bits), ctx);
    XCVec a(6);
    for (Index i = 0; i < 6; ++i)
        a[i] = XComplex(rng.uniform(XReal(-1), XReal(1), bits),
                        rng.uniform(XReal(-1), XReal(1), bits));
    const XReal direct = quadratic_form_inv(p, a);
    const SymEigen& eig = p.spectrum();
    XReal spectral = XReal::zero(bits);
    for (Index i = 0; i < 6; ++i) {
        XComplex vi_dot_a = XComplex::zero(bits);
        for (Index k = 0; k < 6; ++k) vi_dot_a += XComplex(eig.vectors(k, i)) * a[k];
        spectral += abs2(vi_dot_a) / eig.values[i];
    }
    CHECK(abs(direct - spectral) / spectral <= XReal::pow2(-bits / 2));
}

TEST_CASE("precision estimate bounds the measured condition number") {
    // brute force at high fixed precision: cond(S) for N=10, dx/lambda=0.05
    PrecisionContext ctx(512);
    ProlateMatrix p = build_prolate(equispaced_pi(10, "0.1", 512), ctx);
    const XReal smallest = oracle::smallest_eigenvalue_bisect(p.matrix());
    const XReal largest = oracle::largest_eigenvalue_bisect(p.matrix());
    const XReal log2_cond = log2(largest / smallest);
    // the budget reserved by the estimate: 2*(n-1)*log2(1/ratio) ~ 78 bits
    const long budget = estimate_required_bits(10, XReal::from_string("0.05", 64)) - 64;
    CHECK(log2_cond < XReal(budget));
    CHECK(log2_cond > XReal(budget) / XReal(2));  // and not absurdly loose
}

TEST_CASE("lazy factorization and spectrum are safe under concurrent readers") {
    PrecisionContext ctx(256);
    ProlateMatrix p = build_prolate(equispaced_pi(6, "0.2", 256), ctx);
    XCVec a(6);
    for (Index i = 0; i < 6; ++i) a[i] = XComplex(XReal(i % 2 == 0 ? 1 : -1));
    std::vector<std::thread> workers;
    std::vector<std::string> results(8);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] {
            const XReal s_min = smallest_eigenpair(p).first;
            const XReal q = quadratic_form_inv(p, a);
            results[static_cast<size_t>(t)] = s_min.to_string() + "|" + q.to_string();
        });
    for (auto& th : workers) th.join();
    for (int t = 1; t < 8; ++t) CHECK(results[static_cast<size_t>(t)] == results[0]);
}

TEST_CASE("Nyquist multiples give a scaled identity") {
    PrecisionContext ctx(192);
    XVec xs(4);
    xs[0] = ctx.make(0.0);
    xs[1] = ctx.make(1.0);
    xs[2] = ctx.make(3.0);
    xs[3] = ctx.make(6.0);  // all pairwise gaps are multiples of lambda_min/2 = 1
    NodeGeometry g{xs, ctx.pi(), ctx.make(1.0)};
    ProlateMatrix p = build_prolate(g, ctx);
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < i; ++j) CHECK(abs(p.matrix()(i, j)) <= XReal::pow2(-180));
    for (Index i = 0; i < 4; ++i) CHECK(abs(p.matrix()(i, i) - XReal(1)) <= XReal::pow2(-180));
}

TEST_CASE("scale covariance: x -> t x, p_max -> p_max/t leaves t S fixed") {
    PrecisionContext ctx(224);
    const XReal t = ctx.parse("3.5");
    NodeGeometry base = equispaced_pi(4, "0.3", 224);
    XVec scaled_xs(4);
    for (Index i = 0; i < 4; ++i) scaled_xs[i] = base.xs[i] * t;
    NodeGeometry scaled{scaled_xs, base.p_max / t, base.hbar};
    ProlateMatrix p1 = build_prolate(base, ctx);
    ProlateMatrix p2 = build_prolate(scaled, ctx);
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j <= i; ++j)
            CHECK(abs(p2.matrix()(i, j) * t - p1.matrix()(i, j)) <= XReal::pow2(-214));
}

}  // TEST_SUITE prolate
