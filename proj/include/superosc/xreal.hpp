#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace superosc {

// Extended-precision real number backed by MPFR.
//
// Every value carries its own binary precision. Plain constructors take
// values that are exactly representable at 64 bits (ints, doubles), so a
// literal never degrades a computation: binary operations round correctly
// at the *larger* of the two operand precisions. Wider values enter via
// the factory functions (with_bits, from_string, pi, ...) or by combining
// with an already-wide operand.
class XReal {
public:
    static constexpr long kMinBits = 64;

    XReal() { mpfr_init2(v_, kMinBits); }  // NaN
    XReal(int value) : XReal(static_cast<long>(value)) {}
    XReal(long value) {
        mpfr_init2(v_, kMinBits);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    XReal(double value) {
        mpfr_init2(v_, kMinBits);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }

    XReal(const XReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    XReal(XReal&& o) noexcept {
        mpfr_init2(v_, kMinBits);
        mpfr_swap(v_, o.v_);
    }
    XReal& operator=(const XReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    XReal& operator=(XReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~XReal() { mpfr_clear(v_); }

    // -- factories -----------------------------------------------------

    static XReal with_bits(long bits) {  // NaN at the given precision
        XReal r(tag_prec{}, bits);
        return r;
    }
    static XReal zero(long bits) {
        XReal r(tag_prec{}, bits);
        mpfr_set_zero(r.v_, 1);
        return r;
    }
    static XReal from_double(double value, long bits) {
        XReal r(tag_prec{}, bits);
        mpfr_set_d(r.v_, value, MPFR_RNDN);
        return r;
    }
    static XReal from_long(long value, long bits) {
        XReal r(tag_prec{}, bits);
        mpfr_set_si(r.v_, value, MPFR_RNDN);
        return r;
    }
    static XReal from_string(std::string_view dec, long bits) {
        XReal r(tag_prec{}, bits);
        std::string s(dec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("XReal: cannot parse decimal string '" + s + "'");
        return r;
    }
    static XReal pi(long bits) {
        XReal r(tag_prec{}, bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^e, exact
    static XReal pow2(long e, long bits = kMinBits) {
        XReal r(tag_prec{}, bits);
        mpfr_set_ui_2exp(r.v_, 1u, e, MPFR_RNDN);
        return r;
    }

    // -- observers -----------------------------------------------------

    long bits() const { return mpfr_get_prec(v_); }
    // Same value re-rounded at the given precision (exact when widening).
    XReal to_bits(long bits) const {
        XReal r(tag_prec{}, bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Round-trip decimal string: re-parsing at the same precision recovers
    // the value bit for bit (MPFR chooses the digit count).
    std::string to_string() const { return format(0); }
    // Human-readable, `digits` significant decimal digits.
    std::string to_string(int digits) const { return format(digits < 2 ? 2 : digits); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    // -- arithmetic ----------------------------------------------------

    friend XReal operator-(const XReal& a) {
        XReal r(tag_prec{}, a.bits());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

#define SUPEROSC_XREAL_BINOP(op, fn)                                  \
    friend XReal operator op(const XReal& a, const XReal& b) {        \
        XReal r(tag_prec{}, a.bits() > b.bits() ? a.bits() : b.bits()); \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                              \
        return r;                                                     \
    }
    SUPEROSC_XREAL_BINOP(+, mpfr_add)
    SUPEROSC_XREAL_BINOP(-, mpfr_sub)
    SUPEROSC_XREAL_BINOP(*, mpfr_mul)
    SUPEROSC_XREAL_BINOP(/, mpfr_div)
#undef SUPEROSC_XREAL_BINOP

    XReal& operator+=(const XReal& o) { return *this = *this + o; }
    XReal& operator-=(const XReal& o) { return *this = *this - o; }
    XReal& operator*=(const XReal& o) { return *this = *this * o; }
    XReal& operator/=(const XReal& o) { return *this = *this / o; }

    // -- comparisons (unordered against NaN is false) --------------------

    friend bool operator==(const XReal& a, const XReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const XReal& a, const XReal& b) { return mpfr_lessgreater_p(a.v_, b.v_) != 0; }
    friend bool operator<(const XReal& a, const XReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const XReal& a, const XReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const XReal& a, const XReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const XReal& a, const XReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

private:
    struct tag_prec {};
    XReal(tag_prec, long bits) { mpfr_init2(v_, bits < kMinBits ? kMinBits : bits); }

    std::string format(int digits) const;

    mpfr_t v_;
};

// -- free math functions, correctly rounded at the operand precision ------

#define SUPEROSC_XREAL_UNARY(name, fn)                 \
    inline XReal name(const XReal& a) {                \
        XReal r = XReal::with_bits(a.bits());          \
        fn(r.raw(), a.raw(), MPFR_RNDN);               \
        return r;                                      \
    }
SUPEROSC_XREAL_UNARY(abs, mpfr_abs)
SUPEROSC_XREAL_UNARY(sqrt, mpfr_sqrt)
SUPEROSC_XREAL_UNARY(sin, mpfr_sin)
SUPEROSC_XREAL_UNARY(cos, mpfr_cos)
SUPEROSC_XREAL_UNARY(exp, mpfr_exp)
SUPEROSC_XREAL_UNARY(log, mpfr_log)
SUPEROSC_XREAL_UNARY(log2, mpfr_log2)
#undef SUPEROSC_XREAL_UNARY

inline XReal floor(const XReal& a) {
    XReal r = XReal::with_bits(a.bits());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

inline XReal ceil(const XReal& a) {
    XReal r = XReal::with_bits(a.bits());
    mpfr_ceil(r.raw(), a.raw());
    return r;
}

inline void sin_cos(const XReal& a, XReal& s, XReal& c) {
    s = XReal::with_bits(a.bits());
    c = XReal::with_bits(a.bits());
    mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}

inline XReal hypot(const XReal& a, const XReal& b) {
    XReal r = XReal::with_bits(a.bits() > b.bits() ? a.bits() : b.bits());
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

inline XReal atan2(const XReal& y, const XReal& x) {
    XReal r = XReal::with_bits(y.bits() > x.bits() ? y.bits() : x.bits());
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline const XReal& min(const XReal& a, const XReal& b) { return b < a ? b : a; }
inline const XReal& max(const XReal& a, const XReal& b) { return a < b ? b : a; }

inline bool isnan(const XReal& a) { return a.is_nan(); }
inline bool isfinite(const XReal& a) { return a.is_finite(); }

inline std::string XReal::format(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return mpfr_signbit(v_) ? "-0" : "0";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!m.empty() && m[0] == '-') {
        sign = "-";
        m.erase(0, 1);
    }
    // strip trailing zeros but keep at least one digit
    size_t last = m.find_last_not_of('0');
    if (last != std::string::npos) m.erase(last + 1);
    if (m.empty()) m = "0";
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

}  // namespace superosc
