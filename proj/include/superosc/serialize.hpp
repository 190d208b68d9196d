#pragma once

#include <json.hpp>

#include <string>

#include "superosc/scaling.hpp"
#include "superosc/slit.hpp"

namespace superosc {

// Wavefunction interchange document. All numerics are decimal strings at
// full working precision (binary floats would truncate the extended
// precision); re-parsing at the stored bit count recovers every value
// exactly.
nlohmann::json wavefunction_to_json(const Wavefunction& w);
Wavefunction wavefunction_from_json(const nlohmann::json& doc);

// x, re, im rows sampled on a uniform grid of samples_per_gap points per
// node gap across [lo, hi]. digits = 0 keeps full round-trip precision.
std::string wavefunction_samples_csv(const Wavefunction& w, const XReal& lo, const XReal& hi,
                                     long samples_per_gap, int digits = 0);

// parameter, s_min, bits_used [, wall_time]. Timings are off by default so
// identical configs produce byte-identical files.
std::string scaling_report_csv(const ScalingReport& r, bool include_timings = false);
nlohmann::json scaling_report_json(const ScalingReport& r, bool include_timings = false);

// p, density rows; the summary (moments, fractions, error bounds) goes in
// the JSON header document.
std::string slit_report_csv(const SlitReport& r, int digits = 0);
nlohmann::json slit_report_json(const SlitReport& r,
                                const AccelerationSummary* summary = nullptr);

}  // namespace superosc
