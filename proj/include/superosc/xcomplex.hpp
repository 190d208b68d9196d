#pragma once

#include "superosc/xreal.hpp"

namespace superosc {

// Complex number over XReal. Same precision-propagation rule as XReal:
// results are correctly rounded at the wider operand precision.
struct XComplex {
    XReal re;
    XReal im;

    XComplex() : re(0), im(0) {}
    XComplex(XReal r) : re(std::move(r)), im(0) {}
    XComplex(XReal r, XReal i) : re(std::move(r)), im(std::move(i)) {}
    XComplex(int r) : re(r), im(0) {}
    XComplex(double r) : re(r), im(0) {}

    static XComplex zero(long bits) { return XComplex(XReal::zero(bits), XReal::zero(bits)); }
    // e^{i*theta}
    static XComplex cis(const XReal& theta) {
        XReal s, c;
        sin_cos(theta, s, c);
        return XComplex(std::move(c), std::move(s));
    }

    long bits() const { return re.bits() > im.bits() ? re.bits() : im.bits(); }

    friend XComplex operator-(const XComplex& a) { return {-a.re, -a.im}; }
    friend XComplex operator+(const XComplex& a, const XComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend XComplex operator-(const XComplex& a, const XComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend XComplex operator*(const XComplex& a, const XComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend XComplex operator*(const XComplex& a, const XReal& s) { return {a.re * s, a.im * s}; }
    friend XComplex operator*(const XReal& s, const XComplex& a) { return a * s; }
    friend XComplex operator/(const XComplex& a, const XReal& s) { return {a.re / s, a.im / s}; }
    friend XComplex operator/(const XComplex& a, const XComplex& b) {
        XReal d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    XComplex& operator+=(const XComplex& o) { return *this = *this + o; }
    XComplex& operator-=(const XComplex& o) { return *this = *this - o; }
    XComplex& operator*=(const XComplex& o) { return *this = *this * o; }

    friend bool operator==(const XComplex& a, const XComplex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const XComplex& a, const XComplex& b) { return !(a == b); }
};

inline const XReal& real(const XComplex& z) { return z.re; }
inline const XReal& imag(const XComplex& z) { return z.im; }
inline XComplex conj(const XComplex& z) { return {z.re, -z.im}; }
inline XReal abs2(const XComplex& z) { return z.re * z.re + z.im * z.im; }
inline XReal abs(const XComplex& z) { return hypot(z.re, z.im); }

}  // namespace superosc
