#pragma once

#include <Eigen/Core>

#include "superosc/xcomplex.hpp"
#include "superosc/xreal.hpp"

namespace Eigen {

template <>
struct NumTraits<superosc::XReal> : GenericNumTraits<superosc::XReal> {
    typedef superosc::XReal Real;
    typedef superosc::XReal NonInteger;
    typedef superosc::XReal Nested;
    typedef superosc::XReal Literal;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = HugeCost,
        AddCost = HugeCost,
        MulCost = HugeCost
    };

    static inline Real epsilon() { return superosc::XReal::pow2(1 - superosc::XReal::kMinBits); }
    static inline Real dummy_precision() { return superosc::XReal::pow2(-50); }
    static inline int digits10() { return 18; }
    static inline Real highest() { return superosc::XReal::pow2(mpfr_get_emax() - 1); }
    static inline Real lowest() { return -superosc::XReal::pow2(mpfr_get_emax() - 1); }
};

template <>
struct NumTraits<superosc::XComplex> : GenericNumTraits<superosc::XComplex> {
    typedef superosc::XReal Real;
    typedef superosc::XComplex NonInteger;
    typedef superosc::XComplex Nested;
    typedef superosc::XComplex Literal;

    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = HugeCost,
        AddCost = HugeCost,
        MulCost = HugeCost
    };

    static inline Real epsilon() { return NumTraits<Real>::epsilon(); }
    static inline Real dummy_precision() { return NumTraits<Real>::dummy_precision(); }
    static inline int digits10() { return 18; }
};

}  // namespace Eigen

namespace superosc {

using XVec = Eigen::Matrix<XReal, Eigen::Dynamic, 1>;
using XMat = Eigen::Matrix<XReal, Eigen::Dynamic, Eigen::Dynamic>;
using XCVec = Eigen::Matrix<XComplex, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// a^dagger b
inline XComplex cdot(const XCVec& a, const XCVec& b) {
    XComplex s = XComplex::zero(XReal::kMinBits);
    for (Index i = 0; i < a.size(); ++i) s += conj(a[i]) * b[i];
    return s;
}

inline XReal max_abs(const XVec& v) {
    XReal m = XReal::zero(XReal::kMinBits);
    for (Index i = 0; i < v.size(); ++i) m = max(m, abs(v[i]));
    return m;
}

inline XReal max_abs(const XCVec& v) {
    XReal m = XReal::zero(XReal::kMinBits);
    for (Index i = 0; i < v.size(); ++i) m = max(m, abs(v[i]));
    return m;
}

inline XCVec to_complex(const XVec& v) {
    XCVec c(v.size());
    for (Index i = 0; i < v.size(); ++i) c[i] = XComplex(v[i]);
    return c;
}

}  // namespace superosc
