#pragma once

/// @file model.hpp
/// Mass-action SIR vector field and its validated parameter and state types.
///
///   S' = -beta*S*I,  I' = beta*S*I - gamma*I,  R' = gamma*I
///
/// Compartments are real-valued counts on an unnormalized scale. Under a
/// normalized-fraction convention (N = 1) the caller must rescale beta;
/// the equations themselves are unchanged.

#include <array>

#include "sirkit/errors.hpp"

namespace sirkit {

/// Transmission coefficient (1/(population*time)) and recovery rate (1/time).
/// Construction rejects non-finite or non-positive values; degenerate
/// boundary cases (beta = 0 or gamma = 0) are out of scope.
class SirParams {
public:
    SirParams(double beta, double gamma);

    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return gamma_; }

private:
    double beta_;
    double gamma_;
};

/// Validating factory, equivalent to the SirParams constructor.
SirParams validate_params(double beta, double gamma);

/// One (S, I, R) triple on the population scale. Construction rejects
/// NaN/infinity, but deliberately places no sign constraint: nonnegativity
/// is a checked property of trajectories, not of the state type.
class SirState {
public:
    SirState() noexcept : s_(0.0), i_(0.0), r_(0.0) {}
    SirState(double s, double i, double r);

    double s() const noexcept { return s_; }
    double i() const noexcept { return i_; }
    double r() const noexcept { return r_; }

private:
    double s_;
    double i_;
    double r_;
};

/// Rate triple (dS/dt, dI/dt, dR/dt). Sums to zero in real arithmetic.
struct Derivative {
    double ds = 0.0;
    double di = 0.0;
    double dr = 0.0;
};

/// Evaluates the SIR right-hand side. Infection-free states (I = 0) return
/// the exact zero triple: they are stationary, and the bitwise-zero result
/// keeps the growth-condition equivalence exact.
Derivative vector_field(const SirParams& p, const SirState& x);

/// S + I + R.
double total_population(const SirState& x) noexcept;

/// Membership in the conserved nonnegative simplex {S,I,R >= 0, S+I+R = n}:
/// true iff S, I, R >= -tol and |S+I+R - n| <= tol*max(1, n). The sum
/// residual is measured relative to max(1, n) so the test stays meaningful
/// for n near zero.
bool in_simplex(const SirState& x, double n, double tol);

namespace detail {

/// Shared core of the right-hand side, used by both vector_field and the
/// integrator stages so that externally reconstructed trajectories reproduce
/// node derivatives bit for bit.
inline void sir_rhs(const SirParams& p, double s, double i, double& ds, double& di,
                    double& dr) noexcept {
    if (i == 0.0) {
        ds = 0.0;
        di = 0.0;
        dr = 0.0;
        return;
    }
    const double bs = p.beta() * s;
    ds = -(bs * i);
    di = (bs - p.gamma()) * i;
    dr = p.gamma() * i;
}

}  // namespace detail

}  // namespace sirkit
