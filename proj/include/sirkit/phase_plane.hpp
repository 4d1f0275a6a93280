#pragma once

/// @file phase_plane.hpp
/// Kermack-McKendrick level curves in the (S, I) plane: evaluation, branch
/// inversion, and plot-ready tracing. Everything is phrased through
/// g(S) = S - (gamma/beta) ln S, which is strictly convex with its minimum at
/// S = gamma/beta, so each level I = v0 - g(S) has one monotone branch on
/// either side of the stationary threshold.

#include <cstddef>
#include <optional>
#include <vector>

#include "sirkit/model.hpp"

namespace sirkit {

enum class Branch { Left, Right };

struct LevelCurvePoint {
    double s = 0.0;
    double i = 0.0;
    bool feasible = true;  // i >= 0; infeasible points are kept for plotting
};

struct LevelCurve {
    double v0 = 0.0;
    double s_min = 0.0;
    double s_max = 0.0;
    std::vector<LevelCurvePoint> points;
};

/// Level value of the curve through init: km_value(p, init).
/// Requires init.s > 0; throws NonpositiveS.
double level_value(const SirParams& p, const SirState& init);

/// The level equation solved for I: v0 - s + (gamma/beta) ln s. May be
/// negative; negative values mark the biologically infeasible region.
/// Requires s > 0; throws NonpositiveS.
double i_on_level(const SirParams& p, double v0, double s);

/// Inverts I = v0 - g(S) by bisection on the chosen monotone side of
/// gamma/beta, to relative tolerance 1e-12. Returns nothing when
/// v0 - i < g(gamma/beta) (below the minimum, no real solution); the exact
/// tangency value returns gamma/beta on both branches. Throws NonFiniteInput.
std::optional<double> s_on_level(const SirParams& p, double v0, double i, Branch branch);

/// n_points samples of the level curve at geometrically spaced S values in
/// [s_min, s_max] (the ln term dominates near S = 0, so log spacing keeps
/// resolution there). Points with I < 0 are flagged, not dropped. Requires
/// 0 < s_min < s_max and n_points >= 2; throws InvalidRange.
LevelCurve trace_level_curve(const SirParams& p, double v0, double s_min, double s_max,
                             std::size_t n_points);

}  // namespace sirkit
