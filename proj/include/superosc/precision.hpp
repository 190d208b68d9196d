#pragma once

#include "superosc/errors.hpp"
#include "superosc/xreal.hpp"

namespace superosc {

// Working-precision contract shared by all numerical kernels. Tolerances
// are always expressed as multiples of eps = 2^(1-bits); no absolute
// double-precision constants appear inside the kernels.
class PrecisionContext {
public:
    explicit PrecisionContext(long bits, long guard_bits = 32)
        : bits_(bits), guard_bits_(guard_bits) {
        if (bits < 64) throw DomainError("PrecisionContext: bits must be >= 64");
        if (guard_bits < 0) throw DomainError("PrecisionContext: guard_bits must be >= 0");
    }

    long bits() const { return bits_; }
    long guard_bits() const { return guard_bits_; }

    // 2^(1-bits), exact.
    XReal eps() const { return XReal::pow2(1 - bits_, bits_); }

    XReal make(double v) const { return XReal::from_double(v, bits_); }
    XReal make(long v) const { return XReal::from_long(v, bits_); }
    XReal parse(std::string_view dec) const { return XReal::from_string(dec, bits_); }
    XReal pi() const { return XReal::pi(bits_); }

private:
    long bits_;
    long guard_bits_;
};

// Precision budget for an N-node problem with node spacing dx and minimum
// wavelength lambda: log2(cond(S)) grows like 2(N-1)*log2(lambda/dx), so we
// reserve that many bits on top of a 64-bit floor. Advisory; callers add
// their own guard bits. Spacing at or above lambda/2 needs no extra
// precision and is rejected unless `force` is set.
inline long estimate_required_bits(long n, const XReal& dx_over_lambda, bool force = false) {
    if (n < 1) throw DomainError("estimate_required_bits: n must be >= 1");
    if (!(dx_over_lambda > XReal(0)))
        throw DomainError("estimate_required_bits: spacing ratio must be positive");
    if (!(dx_over_lambda * XReal(2) < XReal(1))) {
        if (force) return 64;
        throw DomainError(
            "estimate_required_bits: not superoscillatory regime "
            "(spacing at or above lambda_min/2)");
    }
    if (n == 1) return 64;
    XReal cond_bits = XReal::from_long(2 * (n - 1), 128) * log2(XReal(1) / dx_over_lambda);
    return 64 + ceil(cond_bits).to_long();
}

}  // namespace superosc
