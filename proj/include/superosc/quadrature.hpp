#pragma once

#include "superosc/eigen_support.hpp"

namespace superosc {

// Gauss-Legendre rule on [-1, 1] with nodes and weights computed at the
// requested binary precision (Newton refinement of the Legendre roots).
struct GaussLegendre {
    int order;
    long bits;
    XVec nodes;
    XVec weights;
};

// Cached; safe to call concurrently.
const GaussLegendre& gauss_legendre(int order, long bits);

// Composite quadrature over [a, b] split into n_panels equal panels.
// Fixed summation order, independent of any scheduling.
template <typename F>
XReal integrate(F&& f, const XReal& a, const XReal& b, Index n_panels, const GaussLegendre& rule) {
    const XReal two(2);
    const XReal width = (b - a) / XReal::from_long(n_panels, rule.bits);
    XReal total = XReal::zero(rule.bits);
    for (Index k = 0; k < n_panels; ++k) {
        const XReal lo = a + XReal::from_long(k, rule.bits) * width;
        const XReal mid = lo + width / two;
        const XReal half = width / two;
        XReal panel = XReal::zero(rule.bits);
        for (Index i = 0; i < rule.nodes.size(); ++i)
            panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += half * panel;
    }
    return total;
}

template <typename F>
XComplex integrate_complex(F&& f, const XReal& a, const XReal& b, Index n_panels,
                           const GaussLegendre& rule) {
    const XReal two(2);
    const XReal width = (b - a) / XReal::from_long(n_panels, rule.bits);
    XComplex total = XComplex::zero(rule.bits);
    for (Index k = 0; k < n_panels; ++k) {
        const XReal lo = a + XReal::from_long(k, rule.bits) * width;
        const XReal mid = lo + width / two;
        const XReal half = width / two;
        XComplex panel = XComplex::zero(rule.bits);
        for (Index i = 0; i < rule.nodes.size(); ++i)
            panel += f(mid + half * rule.nodes[i]) * rule.weights[i];
        total += panel * half;
    }
    return total;
}

}  // namespace superosc
