#pragma once

/// @file threshold.hpp
/// Threshold quantities R_init and R_eff(t), initial epidemic classification,
/// interval-wide I-monotonicity under R_init <= 1, and detection of the
/// stationary-infection crossing S = gamma/beta.

#include <optional>

#include "sirkit/invariants.hpp"

namespace sirkit {

/// Width of the classification band around r_init = 1. The theory separates
/// <= from < exactly; floating point cannot, so the NonGrowth verdict absorbs
/// the ambiguity.
inline constexpr double kEqTol = 1e-9;

enum class InitialVerdict { Growth, Decline, NonGrowth, NoInfection };

const char* to_string(InitialVerdict verdict) noexcept;

/// The time where S crosses gamma/beta, with the dense-output values there.
/// i_prime_at = I(t_star) * (beta * S(t_star) - gamma).
struct StationaryCrossing {
    double t_star = 0.0;
    double s_at = 0.0;
    double i_prime_at = 0.0;
};

struct ThresholdClassification {
    double r_init = 0.0;
    InitialVerdict initial_verdict = InitialVerdict::NoInfection;
    bool i_monotone_checked = false;
    std::optional<StationaryCrossing> crossing;
};

/// Initial effective threshold ratio beta * S(0) / gamma.
double r_init(const SirParams& p, const SirState& init);

/// Effective threshold ratio beta * S(t) / gamma at a state.
double r_eff(const SirParams& p, const SirState& x);

/// NoInfection if I(0) = 0; otherwise Growth / Decline by r_init against 1,
/// with NonGrowth inside the kEqTol band.
InitialVerdict classify_initial(const SirParams& p, const SirState& init);

/// "i_nonincreasing": worst rise of I between consecutive samples, as in
/// check_monotonicity; pass iff <= mono_slack * max(1,N). Applies only when
/// r_init <= 1 + kEqTol; otherwise reported Skipped (not applicable).
CheckRecord check_i_monotone_subthreshold(const Trajectory& tr, const MonitorConfig& cfg = {});

/// Locates the crossing S(t) = gamma/beta by bisection on the dense output,
/// to time resolution 1e-12 * t_end. Returns nothing when S never reaches
/// the threshold on the window. S(0) = gamma/beta exactly returns t_star = 0
/// (boundary tie-break); an exact touch at t_end is reported as a crossing.
std::optional<StationaryCrossing> detect_stationary_crossing(const Trajectory& tr);

/// The factored growth test I > 0 and beta * S > gamma, exactly equivalent to
/// vector_field(p, x).di > 0 for nonnegative I. Throws NegativeI when
/// I < 0, where the equivalence does not hold.
bool growth_condition(const SirParams& p, const SirState& x);

/// Aggregate: r_init, initial verdict, whether the subthreshold
/// I-monotonicity check applied (and therefore ran), and any crossing.
ThresholdClassification analyze_thresholds(const Trajectory& tr, const MonitorConfig& cfg = {});

}  // namespace sirkit
