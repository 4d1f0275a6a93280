#pragma once

/// @file representations.hpp
/// Integrating-factor integral representations of S and I,
///
///   S(t) = S(0) * exp(-beta * p_i(t)),   I(t) = I(0) * exp(g_i(t)),
///
/// evaluated from a trajectory's augmented integrals, plus residuals that
/// quantify how well the integrated compartments satisfy them. A generic
/// scalar variant works on user-supplied coefficient samples via trapezoid
/// quadrature.

#include <cstddef>
#include <span>
#include <utility>

#include "sirkit/integrator.hpp"

namespace sirkit {

struct RepresentationResidual {
    double max_rel_error_s = 0.0;
    double max_rel_error_i = 0.0;
    double argmax_t_s = 0.0;
    double argmax_t_i = 0.0;
};

/// S(0) * exp(-beta * p_i(t)). Throws TimeOutOfRange outside [0, t_end].
double s_representation(const Trajectory& tr, double t);

/// I(0) * exp(g_i(t)). Throws TimeOutOfRange outside [0, t_end].
double i_representation(const Trajectory& tr, double t);

/// Max relative deviation between each representation and the sampled
/// compartment over n_samples uniform times spanning [0, t_end]. The
/// denominator is floored at max(1, N) * 1e-12 because I decays toward zero
/// in subthreshold scenarios, where a pure relative error is ill-posed.
/// Requires n_samples >= 2.
RepresentationResidual representation_residuals(const Trajectory& tr, std::size_t n_samples);

/// Generic integrating-factor solution x_a * exp(integral of f from a to t)
/// for a scalar linear ODE x' = f(t) x, with f given as (time, value) samples
/// ordered strictly increasing in time and integrated by the trapezoid rule
/// (linear interpolation for a partial final panel). Throws UnorderedSamples,
/// TimeOutOfRange, NonFiniteInput.
double scalar_linear_solution(std::span<const std::pair<double, double>> f_samples, double x_a,
                              double t);

}  // namespace sirkit
