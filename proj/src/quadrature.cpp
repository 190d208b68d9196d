#include "superosc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "superosc/errors.hpp"

namespace superosc {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, const XReal& x, XReal& p, XReal& dp) {
    const long bits = x.bits();
    XReal p0 = XReal::from_long(1, bits);
    XReal p1 = x;
    for (int k = 2; k <= n; ++k) {
        XReal pk = (XReal::from_long(2 * k - 1, bits) * x * p1 -
                    XReal::from_long(k - 1, bits) * p0) /
                   XReal::from_long(k, bits);
        p0 = std::move(p1);
        p1 = std::move(pk);
    }
    p = p1;
    dp = XReal::from_long(n, bits) * (x * p1 - p0) / (x * x - XReal(1));
}

GaussLegendre compute_rule(int order, long bits) {
    if (order < 1) throw DomainError("gauss_legendre: order must be >= 1");
    GaussLegendre rule{order, bits, XVec(order), XVec(order)};
    const long work = bits + 16;
    // Newton converges quadratically from the double-precision seed; the
    // iteration count covers doublings from ~50 correct bits plus slack.
    int iters = 3;
    for (long b = 64; b < work; b *= 2) ++iters;
    for (int i = 0; i < order; ++i) {
        double seed = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        XReal x = XReal::from_double(seed, work);
        XReal p = XReal::zero(work), dp = XReal::zero(work);
        for (int it = 0; it < iters; ++it) {
            legendre(order, x, p, dp);
            x -= p / dp;
        }
        legendre(order, x, p, dp);
        XReal w = XReal(2) / ((XReal(1) - x * x) * dp * dp);
        // nodes ascending, rounded back from the working slack precision
        rule.nodes[order - 1 - i] = x.to_bits(bits);
        rule.weights[order - 1 - i] = w.to_bits(bits);
    }
    return rule;
}

std::mutex cache_mu;
std::map<std::pair<int, long>, GaussLegendre> cache;

}  // namespace

const GaussLegendre& gauss_legendre(int order, long bits) {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto key = std::make_pair(order, bits);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_rule(order, bits)).first;
    return it->second;
}

}  // namespace superosc
