#include <doctest.h>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <sirkit/errors.hpp>
#include <sirkit/integrator.hpp>
#include <sirkit/invariants.hpp>
#include <sirkit/model.hpp>

#include "support/oracle.hpp"

using namespace sirkit;

namespace {

const SirParams kParams(0.3, 0.1);
const SirState kInit(0.99, 0.01, 0.0);

Trajectory canonical() { return integrate(kParams, kInit, 100.0); }

Trajectory constant() { return integrate(kParams, SirState(0.6, 0.0, 0.4), 10.0); }

// Copies a trajectory's nodes, lets the caller tamper with them, and rebuilds.
template <typename Fn>
Trajectory corrupted(const Trajectory& tr, Fn&& tamper) {
    std::vector<std::pair<double, AugmentedState>> pairs;
    for (const auto& node : tr.nodes())
        pairs.emplace_back(node.t, node.y);
    tamper(pairs);
    return Trajectory::from_nodes(tr.params(), pairs);
}

const CheckRecord& find(const InvariantReport& rep, const std::string& name) {
    for (const auto& rec : rep.checks)
        if (rec.name == name)
            return rec;
    REQUIRE_MESSAGE(false, "missing check record: " << name);
    return rep.checks.front(); // unreachable
}

} // namespace

TEST_CASE("to_string(CheckStatus)") {
    CHECK(std::string(to_string(CheckStatus::Pass)) == "pass");
    CHECK(std::string(to_string(CheckStatus::Fail)) == "fail");
    CHECK(std::string(to_string(CheckStatus::Skipped)) == "skipped");
}

TEST_CASE("check_conservation") {
    SUBCASE("constant trajectory has exactly zero residual") {
        const CheckRecord rec = check_conservation(constant());
        CHECK(rec.status == CheckStatus::Pass);
        CHECK(rec.worst_residual == 0.0);
        CHECK(rec.tolerance_used == 1e-9);
    }
    SUBCASE("epidemic scenario passes within 1e-9") {
        const CheckRecord rec = check_conservation(canonical());
        CHECK(rec.status == CheckStatus::Pass);
        CHECK(rec.worst_residual <= 1e-9);
        CHECK(rec.worst_t >= 0.0);
        CHECK(rec.worst_t <= 100.0);
    }
    SUBCASE("corrupted node fails") {
        const Trajectory bad = corrupted(canonical(), [](auto& pairs) {
            auto& y = pairs[pairs.size() / 2].second;
            y.core = SirState(y.core.s() + 1e-3, y.core.i(), y.core.r());
        });
        const CheckRecord rec = check_conservation(bad);
        CHECK(rec.status == CheckStatus::Fail);
        CHECK(rec.worst_residual > 1e-9);
    }
}

TEST_CASE("check_nonnegativity") {
    SUBCASE("boundary initial data passes with min I = 0") {
        const CheckRecord rec = check_nonnegativity(constant());
        CHECK(rec.status == CheckStatus::Pass);
        CHECK(rec.worst_residual == 0.0);
    }
    SUBCASE("epidemic scenario passes") {
        CHECK(check_nonnegativity(canonical()).status == CheckStatus::Pass);
    }
    SUBCASE("corrupted node fails") {
        const Trajectory bad = corrupted(canonical(), [](auto& pairs) {
            auto& y = pairs[pairs.size() / 2].second;
            y.core = SirState(y.core.s(), -1e-3, y.core.r());
        });
        const CheckRecord rec = check_nonnegativity(bad);
        CHECK(rec.status == CheckStatus::Fail);
        CHECK(rec.worst_residual < 0.0);
    }
}

TEST_CASE("check_bounds") {
    SUBCASE("everyone-susceptible boundary state stays at S = N exactly") {
        const Trajectory tr = integrate(kParams, SirState(1.0, 0.0, 0.0), 10.0);
        const CheckRecord rec = check_bounds(tr);
        CHECK(rec.status == CheckStatus::Pass);
        CHECK(rec.worst_residual <= 0.0); // S = N has zero excess
    }
    SUBCASE("epidemic scenario passes") {
        CHECK(check_bounds(canonical()).status == CheckStatus::Pass);
    }
    SUBCASE("node beyond N fails") {
        const Trajectory bad = corrupted(canonical(), [](auto& pairs) {
            auto& y = pairs[pairs.size() / 2].second;
            y.core = SirState(1.0 + 1e-3, y.core.i(), y.core.r());
        });
        CHECK(check_bounds(bad).status == CheckStatus::Fail);
    }
}

TEST_CASE("check_monotonicity") {
    SUBCASE("constant trajectory consumes zero slack") {
        const auto recs = check_monotonicity(constant());
        CHECK(recs[0].name == "s_nonincreasing");
        CHECK(recs[1].name == "r_nondecreasing");
        for (const auto& rec : recs) {
            CHECK(rec.status == CheckStatus::Pass);
            CHECK(rec.worst_residual == 0.0);
        }
    }
    SUBCASE("epidemic scenario passes") {
        for (const auto& rec : check_monotonicity(canonical()))
            CHECK(rec.status == CheckStatus::Pass);
    }
    SUBCASE("value-reversed node list fails the S check") {
        const Trajectory bad = corrupted(canonical(), [](auto& pairs) {
            // Keep the time grid but reverse the value sequence, so S rises.
            const auto first = pairs.front().second;
            for (std::size_t k = 0, j = pairs.size() - 1; k < j; ++k, --j)
                std::swap(pairs[k].second, pairs[j].second);
            pairs.front().second = first; // restore the required zero integrals
        });
        const auto recs = check_monotonicity(bad);
        CHECK(recs[0].status == CheckStatus::Fail);
    }
}

TEST_CASE("km_value") {
    CHECK(km_value(SirParams(0.7, 0.7), SirState(1.0, 0.25, 0.0)) == 1.25);
    CHECK(km_value(SirParams(1.0, 1.0), SirState(std::exp(1.0), 0.0, 0.0)) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)km_value(kParams, SirState(0.0, 0.5, 0.0)), NonpositiveS);
    CHECK_THROWS_AS((void)km_value(kParams, SirState(-1.0, 0.5, 0.0)), NonpositiveS);
}

TEST_CASE("check_km_constancy") {
    SUBCASE("constant trajectory with S > 0 has zero drift") {
        const CheckRecord rec = check_km_constancy(constant());
        CHECK(rec.status == CheckStatus::Pass);
        CHECK(rec.worst_residual == 0.0);
    }
    SUBCASE("epidemic scenario drifts at most 1e-7") {
        const CheckRecord rec = check_km_constancy(canonical());
        CHECK(rec.status == CheckStatus::Pass);
        CHECK(rec.worst_residual <= 1e-7);
        CHECK(rec.tolerance_used == 1e-7);
    }
    SUBCASE("S(0) = 0 is reported as skipped, not pass or fail") {
        const Trajectory tr = integrate(kParams, SirState(0.0, 0.5, 0.5), 10.0);
        const CheckRecord rec = check_km_constancy(tr);
        CHECK(rec.status == CheckStatus::Skipped);
        CHECK_FALSE(rec.note.empty());
        CHECK(rec.passed()); // skipped never fails a report
    }
}

TEST_CASE("run_all") {
    SUBCASE("epidemic scenario passes overall") {
        const InvariantReport rep = run_all(canonical());
        CHECK(rep.overall);
        CHECK(rep.checks.size() == 7);
        CHECK(rep.n_samples >= 1000);
        CHECK(find(rep, "simplex").status == CheckStatus::Pass);
    }
    SUBCASE("constant trajectory passes overall") {
        CHECK(run_all(constant()).overall);
    }
    SUBCASE("corrupted trajectory fails overall and lists the failing checks") {
        const Trajectory bad = corrupted(canonical(), [](auto& pairs) {
            auto& y = pairs[pairs.size() / 2].second;
            y.core = SirState(y.core.s(), y.core.i() + 1e-3, y.core.r());
        });
        const InvariantReport rep = run_all(bad);
        CHECK_FALSE(rep.overall);
        CHECK(find(rep, "conservation").status == CheckStatus::Fail);
        CHECK(find(rep, "simplex").status == CheckStatus::Fail);
        CHECK(find(rep, "nonnegativity").status == CheckStatus::Pass);
    }
}

TEST_CASE("report determinism") {
    const Trajectory tr = canonical();
    const InvariantReport a = run_all(tr);
    const InvariantReport b = run_all(tr);
    REQUIRE(a.checks.size() == b.checks.size());
    CHECK(a.overall == b.overall);
    CHECK(a.n_samples == b.n_samples);
    for (std::size_t k = 0; k < a.checks.size(); ++k) {
        CHECK(a.checks[k].name == b.checks[k].name);
        CHECK(a.checks[k].status == b.checks[k].status);
        CHECK(a.checks[k].worst_residual == b.checks[k].worst_residual);
        CHECK(a.checks[k].worst_t == b.checks[k].worst_t);
        CHECK(a.checks[k].tolerance_used == b.checks[k].tolerance_used);
        CHECK(a.checks[k].note == b.checks[k].note);
    }
}

TEST_CASE("loosening every tolerance never flips a pass to fail") {
    const Trajectory bad = corrupted(canonical(), [](auto& pairs) {
        auto& y = pairs[pairs.size() / 2].second;
        y.core = SirState(y.core.s() + 1e-8, y.core.i(), y.core.r());
    });
    MonitorConfig tight;
    MonitorConfig loose;
    loose.cons_tol = tight.cons_tol * 10.0;
    loose.sign_tol = tight.sign_tol * 10.0;
    loose.mono_slack = tight.mono_slack * 10.0;
    loose.km_tol = tight.km_tol * 10.0;
    const InvariantReport a = run_all(bad, tight);
    const InvariantReport b = run_all(bad, loose);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t k = 0; k < a.checks.size(); ++k)
        if (a.checks[k].status == CheckStatus::Pass)
            CHECK(b.checks[k].status == CheckStatus::Pass);
}

TEST_CASE("KM drift tracks integration error, not model error") {
    // The fixed-step RK4 oracle drifts strictly less than a coarse adaptive
    // run of the same scenario.
    const auto run = testing::oracle_run(kParams, kInit, 40.0);
    const Trajectory fine = Trajectory::from_nodes(kParams, run.nodes);

    IntegratorConfig coarse_cfg;
    coarse_cfg.rtol = 1e-4;
    coarse_cfg.atol = 1e-6;
    const Trajectory coarse = integrate(kParams, kInit, 40.0, coarse_cfg);

    const double fine_drift = check_km_constancy(fine).worst_residual;
    const double coarse_drift = check_km_constancy(coarse).worst_residual;
    CHECK(fine_drift < coarse_drift);
}

TEST_CASE("resolve_monitor") {
    const Trajectory tr = canonical();

    SUBCASE("derives s_floor and n_samples from the trajectory") {
        const MonitorConfig r = resolve_monitor({}, tr);
        CHECK(r.s_floor == 1e-9); // N = 1 here
        CHECK(r.n_samples ==
              std::max<std::size_t>(1000, 4 * tr.stats().accepted_steps));
    }
    SUBCASE("explicit values are preserved") {
        MonitorConfig cfg;
        cfg.s_floor = 1e-6;
        cfg.n_samples = 5000;
        const MonitorConfig r = resolve_monitor(cfg, tr);
        CHECK(r.s_floor == 1e-6);
        CHECK(r.n_samples == 5000);
    }
    SUBCASE("rejects invalid settings") {
        MonitorConfig bad;
        bad.cons_tol = 0.0;
        CHECK_THROWS_AS((void)resolve_monitor(bad, tr), std::invalid_argument);
        bad = {};
        bad.mono_slack = -1e-12;
        CHECK_THROWS_AS((void)resolve_monitor(bad, tr), std::invalid_argument);
        bad = {};
        bad.n_samples = 1;
        CHECK_THROWS_AS((void)resolve_monitor(bad, tr), std::invalid_argument);
    }
}
