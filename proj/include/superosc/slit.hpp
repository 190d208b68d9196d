#pragma once

#include <vector>

#include "superosc/synth.hpp"

namespace superosc {

// Hard (sharp-edged) slit: the source wave function multiplied by the
// indicator of [lo, hi]. No apodization.
struct SlitWindow {
    XReal lo;
    XReal hi;
    const Wavefunction* source;
};

// Momentum distribution of the windowed, renormalized wave function on the
// finite symmetric grid [-p_grid_max, p_grid_max].
struct SlitReport {
    XReal captured_probability{0};  // window mass / ||psi||^2, in (0, 1]
    XReal p_grid_max{0};
    std::vector<XReal> p_grid;      // plotting grid
    std::vector<XReal> density;     // |psi~_W|^2 / mass, unit integral over the grid range
    XReal expectation_abs_p{0};     // under the renormalized density
    XReal fraction_above_cutoff{0}; // renormalized mass with |p| > p_max
    XReal mass_in_grid{0};          // windowed momentum mass inside the grid, absolute
    // Mass the finite grid cannot see. Windowed path: Parseval deficit
    // (captured mass minus in-grid mass) plus the quadrature error margin
    // -- finite because a hard-windowed smooth function decays like 1/p.
    // Whole-line path: envelope mass outside the window.
    XReal tail_bound{0};
    XReal quadrature_error_estimate{0};
    long n_quad = 0;
    long x_panels = 0;
    long p_panels = 0;
    bool whole_line_fast_path = false;
};

// Window, transform by composite Gauss-Legendre panels (panel width at most
// a quarter of the shortest oscillation scale present), renormalize over
// the grid, and integrate the density moments. n_quad is the Gauss-Legendre
// order per panel. Throws DomainError when the slit captures nothing and
// QuadratureError (with a usable hint) when the budget cannot reach a 1e-6
// relative error estimate.
SlitReport truncate_and_transform(const SlitWindow& win, const XReal& p_grid_max, long n_quad,
                                  Index density_grid_points = 512);

struct AccelerationSummary {
    XReal expectation_abs_p{0};
    XReal expectation_over_pmax{0};   // > 1 means momentum beyond the cutoff
    XReal superosc_momentum_scale{0}; // pi hbar / min node gap
    XReal expectation_over_scale{0};
    bool self_acceleration = false;   // expectation_abs_p > p_max
};

AccelerationSummary acceleration_summary(const SlitReport& report, const NodeSpec& nodes);

}  // namespace superosc
