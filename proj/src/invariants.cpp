#include "sirkit/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sirkit/errors.hpp"

namespace sirkit {
namespace {

double pop_scale(const Trajectory& tr) { return std::max(1.0, total_population(tr.init())); }

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::invalid_argument(std::string("monitor: ") + name +
                                    " must be positive and finite");
}

}  // namespace

namespace detail {

std::vector<double> monitor_sample_times(const Trajectory& tr, std::size_t n) {
    std::vector<double> grid;
    grid.reserve(n + tr.nodes().size());
    for (std::size_t k = 0; k < n; ++k)
        grid.push_back(k + 1 == n ? tr.t_end()
                                  : tr.t_end() * static_cast<double>(k) /
                                        static_cast<double>(n - 1));
    for (const auto& node : tr.nodes()) grid.push_back(node.t);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace detail

const char* to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

MonitorConfig resolve_monitor(const MonitorConfig& cfg, const Trajectory& tr) {
    MonitorConfig r = cfg;
    require_positive(r.cons_tol, "cons_tol");
    require_positive(r.sign_tol, "sign_tol");
    require_positive(r.mono_slack, "mono_slack");
    require_positive(r.km_tol, "km_tol");
    if (r.s_floor == 0.0) r.s_floor = 1e-9 * pop_scale(tr);
    require_positive(r.s_floor, "s_floor");
    if (r.n_samples == 0)
        r.n_samples = std::max<std::size_t>(1000, 4 * tr.stats().accepted_steps);
    if (r.n_samples < 2) throw std::invalid_argument("monitor: n_samples must be at least 2");
    return r;
}

CheckRecord check_conservation(const Trajectory& tr, const MonitorConfig& cfg) {
    const MonitorConfig rc = resolve_monitor(cfg, tr);
    const double n = total_population(tr.init());
    const double scale = std::max(1.0, n);

    CheckRecord rec{"conservation", CheckStatus::Pass, 0.0, 0.0, rc.cons_tol, ""};
    for (double t : detail::monitor_sample_times(tr, rc.n_samples)) {
        const SirState x = tr.sample(t).core;
        const double res = std::abs(total_population(x) - n) / scale;
        if (res > rec.worst_residual) {
            rec.worst_residual = res;
            rec.worst_t = t;
        }
    }
    if (rec.worst_residual > rc.cons_tol) rec.status = CheckStatus::Fail;
    return rec;
}

CheckRecord check_nonnegativity(const Trajectory& tr, const MonitorConfig& cfg) {
    const MonitorConfig rc = resolve_monitor(cfg, tr);
    const double scale = pop_scale(tr);

    CheckRecord rec{"nonnegativity", CheckStatus::Pass, 0.0, 0.0, rc.sign_tol, ""};
    bool first = true;
    for (double t : detail::monitor_sample_times(tr, rc.n_samples)) {
        const SirState x = tr.sample(t).core;
        const double low = std::min({x.s(), x.i(), x.r()});
        if (first || low < rec.worst_residual) {
            rec.worst_residual = low;
            rec.worst_t = t;
            first = false;
        }
    }
    if (rec.worst_residual < -rc.sign_tol * scale) rec.status = CheckStatus::Fail;
    return rec;
}

CheckRecord check_bounds(const Trajectory& tr, const MonitorConfig& cfg) {
    const MonitorConfig rc = resolve_monitor(cfg, tr);
    const double n = total_population(tr.init());
    const double scale = std::max(1.0, n);

    CheckRecord rec{"bounds", CheckStatus::Pass, 0.0, 0.0, rc.sign_tol, ""};
    bool first = true;
    for (double t : detail::monitor_sample_times(tr, rc.n_samples)) {
        const SirState x = tr.sample(t).core;
        for (double v : {x.s(), x.i(), x.r()}) {
            const double excess = std::max(-v, v - n) / scale;
            if (first || excess > rec.worst_residual) {
                rec.worst_residual = excess;
                rec.worst_t = t;
                first = false;
            }
        }
    }
    if (rec.worst_residual > rc.sign_tol) rec.status = CheckStatus::Fail;
    return rec;
}

std::array<CheckRecord, 2> check_monotonicity(const Trajectory& tr, const MonitorConfig& cfg) {
    const MonitorConfig rc = resolve_monitor(cfg, tr);
    const double slack = rc.mono_slack * pop_scale(tr);

    CheckRecord s_rec{"s_nonincreasing", CheckStatus::Pass, 0.0, 0.0, rc.mono_slack, ""};
    CheckRecord r_rec{"r_nondecreasing", CheckStatus::Pass, 0.0, 0.0, rc.mono_slack, ""};

    double prev_s = 0.0, prev_r = 0.0;
    bool first = true;
    for (double t : detail::monitor_sample_times(tr, rc.n_samples)) {
        const SirState x = tr.sample(t).core;
        if (!first) {
            const double s_rise = x.s() - prev_s;
            if (s_rise > s_rec.worst_residual) {
                s_rec.worst_residual = s_rise;
                s_rec.worst_t = t;
            }
            const double r_drop = prev_r - x.r();
            if (r_drop > r_rec.worst_residual) {
                r_rec.worst_residual = r_drop;
                r_rec.worst_t = t;
            }
        }
        prev_s = x.s();
        prev_r = x.r();
        first = false;
    }
    if (s_rec.worst_residual > slack) s_rec.status = CheckStatus::Fail;
    if (r_rec.worst_residual > slack) r_rec.status = CheckStatus::Fail;
    return {s_rec, r_rec};
}

double km_value(const SirParams& p, const SirState& x) {
    if (!(x.s() > 0.0))
        throw NonpositiveS("km_value: S must be strictly positive, got " + detail::fmt(x.s()));
    return x.i() + x.s() - (p.gamma() / p.beta()) * std::log(x.s());
}

CheckRecord check_km_constancy(const Trajectory& tr, const MonitorConfig& cfg) {
    const MonitorConfig rc = resolve_monitor(cfg, tr);

    CheckRecord rec{"km_constancy", CheckStatus::Pass, 0.0, 0.0, rc.km_tol, ""};
    if (!(tr.init().s() > rc.s_floor)) {
        rec.status = CheckStatus::Skipped;
        rec.note = "S(0) <= s_floor; the KM invariant requires S(0) > 0";
        return rec;
    }

    const double v0 = km_value(tr.params(), tr.init());
    const double scale = std::max(1.0, std::abs(v0));
    for (double t : detail::monitor_sample_times(tr, rc.n_samples)) {
        const AugmentedState x = tr.sample(t);
        if (!(x.core.s() > rc.s_floor)) continue;
        const double drift = std::abs(km_value(tr.params(), x.core) - v0) / scale;
        if (drift > rec.worst_residual) {
            rec.worst_residual = drift;
            rec.worst_t = t;
        }
    }
    if (rec.worst_residual > rc.km_tol) rec.status = CheckStatus::Fail;
    return rec;
}

InvariantReport run_all(const Trajectory& tr, const MonitorConfig& cfg) {
    const MonitorConfig rc = resolve_monitor(cfg, tr);
    const double n = total_population(tr.init());
    const double scale = std::max(1.0, n);

    InvariantReport report;
    report.n_samples = rc.n_samples;
    report.checks.push_back(check_conservation(tr, rc));
    report.checks.push_back(check_nonnegativity(tr, rc));
    report.checks.push_back(check_bounds(tr, rc));
    auto mono = check_monotonicity(tr, rc);
    report.checks.push_back(std::move(mono[0]));
    report.checks.push_back(std::move(mono[1]));
    report.checks.push_back(check_km_constancy(tr, rc));

    CheckRecord simplex{"simplex", CheckStatus::Pass, 0.0, 0.0, rc.cons_tol, ""};
    bool first = true;
    for (double t : detail::monitor_sample_times(tr, rc.n_samples)) {
        const SirState x = tr.sample(t).core;
        // smallest tol making in_simplex(x, n, tol) true
        const double needed = std::max(-std::min({x.s(), x.i(), x.r(), 0.0}),
                                       std::abs(total_population(x) - n) / scale);
        if (first || needed > simplex.worst_residual) {
            simplex.worst_residual = needed;
            simplex.worst_t = t;
            first = false;
        }
    }
    if (simplex.worst_residual > rc.cons_tol) simplex.status = CheckStatus::Fail;
    report.checks.push_back(std::move(simplex));

    report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                                 [](const CheckRecord& c) { return c.passed(); });
    return report;
}

}  // namespace sirkit
