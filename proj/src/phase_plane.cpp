#include "sirkit/phase_plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sirkit/errors.hpp"
#include "sirkit/invariants.hpp"

namespace sirkit {
namespace {

double g_of(const SirParams& p, double s) { return s - (p.gamma() / p.beta()) * std::log(s); }

double bisect(const SirParams& p, double lo, double hi, double target, bool decreasing) {
    // invariant kept: the root stays inside [lo, hi]; stop once the bracket
    // is relatively tight or floating point cannot split it further
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (!(lo < mid && mid < hi)) break;
        const bool above = g_of(p, mid) > target;
        if (above == decreasing)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * lo) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double level_value(const SirParams& p, const SirState& init) { return km_value(p, init); }

double i_on_level(const SirParams& p, double v0, double s) {
    if (!(s > 0.0))
        throw NonpositiveS("i_on_level: S must be strictly positive, got " + detail::fmt(s));
    return v0 - s + (p.gamma() / p.beta()) * std::log(s);
}

std::optional<double> s_on_level(const SirParams& p, double v0, double i, Branch branch) {
    if (!std::isfinite(v0)) throw NonFiniteInput("s_on_level: v0 is not finite");
    if (!std::isfinite(i)) throw NonFiniteInput("s_on_level: i is not finite");

    const double s_thr = p.gamma() / p.beta();
    const double target = v0 - i;
    const double g_min = g_of(p, s_thr);
    if (target < g_min) return std::nullopt;
    if (target == g_min) return s_thr;

    if (branch == Branch::Left) {
        // g(s) >= -(gamma/beta) ln s, so this lower bound already satisfies
        // g >= target
        double lo = std::min(s_thr, std::exp(-target * p.beta() / p.gamma()));
        if (lo <= 0.0) lo = std::numeric_limits<double>::min();
        if (g_of(p, lo) < target) return std::nullopt;  // target beyond representable S
        return bisect(p, lo, s_thr, target, /*decreasing=*/true);
    }

    double hi = std::max(s_thr, 1.0);
    while (g_of(p, hi) < target) {
        hi *= 2.0;
        if (!std::isfinite(hi)) {
            hi = std::numeric_limits<double>::max();
            break;
        }
    }
    return bisect(p, s_thr, hi, target, /*decreasing=*/false);
}

LevelCurve trace_level_curve(const SirParams& p, double v0, double s_min, double s_max,
                             std::size_t n_points) {
    if (!std::isfinite(v0))
        throw InvalidRange("trace_level_curve: level value must be finite, got " +
                           detail::fmt(v0));
    if (!std::isfinite(s_min) || !std::isfinite(s_max) || !(0.0 < s_min) || !(s_min < s_max))
        throw InvalidRange("trace_level_curve: need 0 < s_min < s_max, got [" +
                           detail::fmt(s_min) + ", " + detail::fmt(s_max) + "]");
    if (n_points < 2) throw InvalidRange("trace_level_curve: need at least two points");

    LevelCurve curve{v0, s_min, s_max, {}};
    curve.points.reserve(n_points);
    const double ratio = s_max / s_min;
    for (std::size_t k = 0; k < n_points; ++k) {
        double s;
        if (k == 0)
            s = s_min;
        else if (k + 1 == n_points)
            s = s_max;
        else
            s = s_min * std::pow(ratio, static_cast<double>(k) /
                                            static_cast<double>(n_points - 1));
        const double i = i_on_level(p, v0, s);
        curve.points.push_back({s, i, i >= 0.0});
    }
    return curve;
}

}  // namespace sirkit
