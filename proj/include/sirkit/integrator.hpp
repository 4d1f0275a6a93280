#pragma once

/// @file integrator.hpp
/// Adaptive Dormand-Prince 5(4) integration of the SIR system on [0, t_end],
/// with two augmented quadrature components sharing the step-error control:
///
///   p_i(t) = integral of I           (cumulative infectious load)
///   g_i(t) = integral of beta*S - gamma   (cumulative excess growth rate)
///
/// Dense output is a per-step cubic Hermite interpolant built from the stored
/// endpoint states and derivatives. Negative compartment values are never
/// clamped: the theory guarantees nonnegativity, so negativity beyond
/// tolerance is evidence of integrator error and must stay visible to the
/// invariant checks.
///
/// Results are certified on the finite window [0, t_end] only; the underlying
/// global-existence theory covers all forward times, which no finite
/// computation can.

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sirkit/model.hpp"

namespace sirkit {

/// Step-control settings. h_init and h_max default to 0, meaning
/// "derive from t_end": h_init = 1e-3 * t_end and h_max = t_end / 10.
struct IntegratorConfig {
    double rtol = 1e-8;
    double atol = 1e-10;
    double h_init = 0.0;
    double h_max = 0.0;
    std::size_t max_steps = 1'000'000;
};

/// Fills in the t_end-derived defaults and validates the result
/// (rtol, atol, h_init > 0; h_max >= h_init; max_steps > 0).
/// Throws std::invalid_argument on violation.
IntegratorConfig resolve_config(const IntegratorConfig& cfg, double t_end);

/// SIR state plus the two cumulative integrals, both zero at t = 0.
struct AugmentedState {
    SirState core;
    double p_i = 0.0;
    double g_i = 0.0;
};

/// Dense-output solution on [0, t_end]: accepted-step nodes with states and
/// derivatives, interpolated in between by a cubic Hermite polynomial whose
/// endpoint values reproduce the stored nodes exactly.
class Trajectory {
public:
    struct Node {
        double t = 0.0;
        AugmentedState y;
        std::array<double, 5> f{};  // d/dt of (s, i, r, p_i, g_i)
    };

    struct Stats {
        std::size_t accepted_steps = 0;
        std::size_t rejected_steps = 0;
    };

    /// Rebuilds a trajectory from externally supplied nodes (e.g. a CSV
    /// written by a previous run). Node times must be strictly increasing
    /// and start at t = 0 with zero cumulative integrals. Derivatives are
    /// recomputed from the vector field, which reproduces the integrator's
    /// stored values bit for bit on its own output.
    static Trajectory from_nodes(const SirParams& params,
                                 const std::vector<std::pair<double, AugmentedState>>& nodes);

    const SirParams& params() const noexcept { return params_; }
    const SirState& init() const noexcept { return nodes_.front().y.core; }
    double t_end() const noexcept { return nodes_.back().t; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const Stats& stats() const noexcept { return stats_; }
    const AugmentedState& endpoint() const noexcept { return nodes_.back().y; }

    /// Cubic Hermite dense output. Node times return the stored node state
    /// exactly. Throws TimeOutOfRange outside [0, t_end].
    AugmentedState sample(double t) const;

private:
    friend Trajectory integrate(const SirParams&, const SirState&, double,
                                const IntegratorConfig&);

    Trajectory(SirParams params, std::vector<Node> nodes, Stats stats);

    SirParams params_;
    std::vector<Node> nodes_;
    Stats stats_;
};

/// Integrates the augmented SIR system from nonnegative initial data.
///
/// Local error per step is controlled to rtol/atol by the embedded 5(4)
/// pair with a PI step controller (safety 0.9, growth clamp [0.2, 5]).
/// The estimated deviation of the cubic Hermite interpolant from the
/// method's full dense output enters the same acceptance test, so sampled
/// values between nodes meet the tolerance too, and an additional cap keeps
/// h inside the method's real stability interval, sized from the current
/// state, so long post-epidemic tails decay through positive values instead
/// of ringing around zero.
///
/// Throws NegativeInitialData, StepBudgetExhausted, StepUnderflow;
/// std::invalid_argument for a non-positive t_end or invalid config.
Trajectory integrate(const SirParams& p, const SirState& init, double t_end,
                     const IntegratorConfig& cfg = {});

/// Re-integrates the same problem under each config of a tolerance-refinement
/// sequence (rtol strictly decreasing) and returns the endpoint states, so the
/// caller can observe successive differences shrink. This is a numerical
/// convergence surrogate for solution uniqueness, not a proof.
std::vector<AugmentedState> refine_convergence(const SirParams& p, const SirState& init,
                                               double t_end,
                                               std::span<const IntegratorConfig> cfgs);

}  // namespace sirkit
