#include "sirkit/representations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sirkit/errors.hpp"

namespace sirkit {

double s_representation(const Trajectory& tr, double t) {
    return tr.init().s() * std::exp(-tr.params().beta() * tr.sample(t).p_i);
}

double i_representation(const Trajectory& tr, double t) {
    return tr.init().i() * std::exp(tr.sample(t).g_i);
}

RepresentationResidual representation_residuals(const Trajectory& tr, std::size_t n_samples) {
    if (n_samples < 2)
        throw std::invalid_argument("representation_residuals: need at least two samples");

    const double t_end = tr.t_end();
    const double n_pop = total_population(tr.init());
    const double floor = std::max(1.0, n_pop) * 1e-12;

    RepresentationResidual res;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t =
            (k + 1 == n_samples) ? t_end : t_end * static_cast<double>(k) / (n_samples - 1);
        const AugmentedState x = tr.sample(t);

        const double s_rep = tr.init().s() * std::exp(-tr.params().beta() * x.p_i);
        const double i_rep = tr.init().i() * std::exp(x.g_i);

        const double es = std::abs(s_rep - x.core.s()) / std::max(floor, std::abs(x.core.s()));
        const double ei = std::abs(i_rep - x.core.i()) / std::max(floor, std::abs(x.core.i()));
        if (es > res.max_rel_error_s) {
            res.max_rel_error_s = es;
            res.argmax_t_s = t;
        }
        if (ei > res.max_rel_error_i) {
            res.max_rel_error_i = ei;
            res.argmax_t_i = t;
        }
    }
    return res;
}

double scalar_linear_solution(std::span<const std::pair<double, double>> f_samples, double x_a,
                              double t) {
    if (f_samples.empty())
        throw std::invalid_argument("scalar_linear_solution: need at least one sample");
    if (!std::isfinite(x_a)) throw NonFiniteInput("scalar_linear_solution: x_a is not finite");
    for (std::size_t k = 0; k < f_samples.size(); ++k) {
        if (!std::isfinite(f_samples[k].first) || !std::isfinite(f_samples[k].second))
            throw NonFiniteInput("scalar_linear_solution: sample is not finite");
        if (k > 0 && !(f_samples[k].first > f_samples[k - 1].first))
            throw UnorderedSamples("scalar_linear_solution: sample times must be strictly increasing");
    }

    const double a = f_samples.front().first;
    const double b = f_samples.back().first;
    if (!(t >= a) || t > b) throw TimeOutOfRange(t, a, b);

    double integral = 0.0;
    for (std::size_t k = 0; k + 1 < f_samples.size(); ++k) {
        const auto [t0, f0] = f_samples[k];
        const auto [t1, f1] = f_samples[k + 1];
        if (t >= t1) {
            integral += 0.5 * (t1 - t0) * (f0 + f1);
            continue;
        }
        if (t > t0) {
            const double ft = f0 + (f1 - f0) * ((t - t0) / (t1 - t0));
            integral += 0.5 * (t - t0) * (f0 + ft);
        }
        break;
    }
    return x_a * std::exp(integral);
}

}  // namespace sirkit
