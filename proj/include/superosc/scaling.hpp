#pragma once

#include <string>
#include <vector>

#include "superosc/synth.hpp"

namespace superosc {

enum class SweepMode { FixedNVaryDx, FixedDxVaryN };
enum class AmplitudeSource { SminEigenvector, Alternating };

// Parses a decimal string; the literal "pi" is accepted so the p_max = pi
// convention survives precision changes exactly.
XReal parse_number(const std::string& text, long bits);

// Parameter sweep over node spacing (fixed N) or node count (fixed dx).
// Numeric fields are decimal strings because each grid point picks its own
// working precision; parsing happens per point at that precision. Spacings
// are fractions of lambda_min and must stay inside the superoscillatory
// regime (ratio < 1/2).
struct SweepConfig {
    SweepMode mode = SweepMode::FixedNVaryDx;
    long fixed_n = 0;                         // FixedNVaryDx
    std::string fixed_dx_ratio;               // FixedDxVaryN
    std::vector<std::string> dx_ratio_grid;   // FixedNVaryDx
    std::vector<long> n_grid;                 // FixedDxVaryN
    std::string p_max = "pi";
    std::string hbar = "1";
    AmplitudeSource amplitude_source = AmplitudeSource::SminEigenvector;
    long guard_bits = 32;
    long bits_override = 0;  // 0 = per-point estimate_required_bits

    void validate() const;
};

struct SweepPoint {
    XReal parameter{0};  // dx ratio or N
    XReal s_min{0};
    long bits_used = 0;
    double wall_seconds = 0;
    bool ok = false;
    std::string error;
};

struct FitResult {
    XReal slope{0};
    XReal intercept{0};
    XReal r_squared{0};
    XReal max_abs_residual{0};
    long points_used = 0;
};

struct ScalingReport {
    SweepMode mode = SweepMode::FixedNVaryDx;
    std::vector<SweepPoint> points;
    FitResult fit;
    // Fitted dx-exponent of s_min (expected 2(N-1)) for dx sweeps; decay
    // rate gamma (from s_min ~ sqrt(N) e^{-gamma N}) for N sweeps.
    XReal exponent_or_gamma{0};
    bool complete = false;
};

// Unweighted least squares of y against x.
FitResult fit_line(const std::vector<XReal>& xs, const std::vector<XReal>& ys);

// log s_min vs log dx over the smallest grid decade; slope -> 2(N-1).
ScalingReport sweep_dx(const SweepConfig& cfg);

// log s_min - (1/2) log N vs N over the whole grid; gamma = -slope. Set
// sqrt_n_correction = false to drop the sqrt(N) model term (for model
// comparison).
ScalingReport sweep_n(const SweepConfig& cfg, bool sqrt_n_correction = true);

}  // namespace superosc
