#include "sirkit/threshold.hpp"

#include <algorithm>
#include <cmath>

#include "sirkit/errors.hpp"

namespace sirkit {

const char* to_string(InitialVerdict verdict) noexcept {
    switch (verdict) {
        case InitialVerdict::Growth: return "growth";
        case InitialVerdict::Decline: return "decline";
        case InitialVerdict::NonGrowth: return "non_growth";
        case InitialVerdict::NoInfection: return "no_infection";
    }
    return "unknown";
}

double r_init(const SirParams& p, const SirState& init) {
    return p.beta() * init.s() / p.gamma();
}

double r_eff(const SirParams& p, const SirState& x) { return p.beta() * x.s() / p.gamma(); }

InitialVerdict classify_initial(const SirParams& p, const SirState& init) {
    if (init.i() == 0.0) return InitialVerdict::NoInfection;
    const double r = r_init(p, init);
    if (std::abs(r - 1.0) <= kEqTol) return InitialVerdict::NonGrowth;
    return r > 1.0 ? InitialVerdict::Growth : InitialVerdict::Decline;
}

CheckRecord check_i_monotone_subthreshold(const Trajectory& tr, const MonitorConfig& cfg) {
    const MonitorConfig rc = resolve_monitor(cfg, tr);

    CheckRecord rec{"i_nonincreasing", CheckStatus::Pass, 0.0, 0.0, rc.mono_slack, ""};
    const double r = r_init(tr.params(), tr.init());
    if (r > 1.0 + kEqTol) {
        rec.status = CheckStatus::Skipped;
        rec.note = "not applicable: r_init > 1";
        return rec;
    }

    const double slack = rc.mono_slack * std::max(1.0, total_population(tr.init()));
    double prev_i = 0.0;
    bool first = true;
    for (double t : detail::monitor_sample_times(tr, rc.n_samples)) {
        const double i = tr.sample(t).core.i();
        if (!first) {
            const double rise = i - prev_i;
            if (rise > rec.worst_residual) {
                rec.worst_residual = rise;
                rec.worst_t = t;
            }
        }
        prev_i = i;
        first = false;
    }
    if (rec.worst_residual > slack) rec.status = CheckStatus::Fail;
    return rec;
}

std::optional<StationaryCrossing> detect_stationary_crossing(const Trajectory& tr) {
    const SirParams& p = tr.params();
    const double s_thr = p.gamma() / p.beta();

    const auto crossing_at = [&](double t) {
        const SirState x = tr.sample(t).core;
        return StationaryCrossing{t, x.s(), vector_field(p, x).di};
    };

    const double f0 = tr.init().s() - s_thr;
    if (f0 == 0.0) return crossing_at(0.0);
    if (f0 < 0.0) return std::nullopt;

    const double fe = tr.endpoint().core.s() - s_thr;
    if (fe > 0.0) return std::nullopt;
    if (fe == 0.0) return crossing_at(tr.t_end());

    double lo = 0.0, hi = tr.t_end();
    const double resolution = 1e-12 * tr.t_end();
    for (int iter = 0; iter < 200 && hi - lo > resolution; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (tr.sample(mid).core.s() - s_thr > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return crossing_at(0.5 * (lo + hi));
}

bool growth_condition(const SirParams& p, const SirState& x) {
    if (x.i() < 0.0)
        throw NegativeI("growth_condition: requires I >= 0, got " + detail::fmt(x.i()));
    return x.i() > 0.0 && p.beta() * x.s() > p.gamma();
}

ThresholdClassification analyze_thresholds(const Trajectory& tr, const MonitorConfig& cfg) {
    ThresholdClassification out;
    out.r_init = r_init(tr.params(), tr.init());
    out.initial_verdict = classify_initial(tr.params(), tr.init());
    out.i_monotone_checked =
        check_i_monotone_subthreshold(tr, cfg).status != CheckStatus::Skipped;
    out.crossing = detect_stationary_crossing(tr);
    return out;
}

}  // namespace sirkit
