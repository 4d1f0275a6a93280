#include <doctest.h>

#include <cmath>
#include <limits>

#include <sirkit/errors.hpp>
#include <sirkit/integrator.hpp>
#include <sirkit/invariants.hpp>
#include <sirkit/phase_plane.hpp>

#include "support/rng.hpp"

using namespace sirkit;

namespace {

const SirParams kParams(0.3, 0.1);
const SirState kInit(0.99, 0.01, 0.0);

double g_of(const SirParams& p, double s) {
    return s - (p.gamma() / p.beta()) * std::log(s);
}

} // namespace

TEST_CASE("level_value") {
    CHECK(level_value(SirParams(0.8, 0.8), SirState(1.0, 0.5, 0.0)) == 1.5);
    CHECK(level_value(SirParams(1.0, 1.0), SirState(std::exp(1.0), 0.0, 0.0)) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)level_value(kParams, SirState(0.0, 0.5, 0.0)), NonpositiveS);
}

TEST_CASE("level_value equals km_value along a trajectory within km_tol") {
    const Trajectory tr = integrate(kParams, kInit, 100.0);
    const double v0 = level_value(kParams, kInit);
    const double scale = std::max(1.0, std::abs(v0));
    for (int k = 0; k <= 300; ++k) {
        const double t = (k == 300) ? 100.0 : 100.0 * k / 300.0;
        const double v = km_value(kParams, tr.sample(t).core);
        CHECK(std::abs(v - v0) <= 1e-7 * scale);
    }
}

TEST_CASE("i_on_level") {
    CHECK(i_on_level(SirParams(0.5, 0.5), 1.0, 1.0) == 0.0);
    CHECK(i_on_level(SirParams(0.5, 0.5), 1.5, 1.0) == 0.5);
    CHECK_THROWS_AS((void)i_on_level(kParams, 1.0, 0.0), NonpositiveS);
    CHECK_THROWS_AS((void)i_on_level(kParams, 1.0, -0.5), NonpositiveS);
}

TEST_CASE("s_on_level") {
    const double s_thr = kParams.gamma() / kParams.beta();

    SUBCASE("tangency at the minimum returns gamma/beta on both branches") {
        const double v0 = 2.0;
        const double i_t = v0 - g_of(kParams, s_thr);
        const auto left = s_on_level(kParams, v0, i_t, Branch::Left);
        const auto right = s_on_level(kParams, v0, i_t, Branch::Right);
        REQUIRE(left.has_value());
        REQUIRE(right.has_value());
        CHECK(*left == s_thr);
        CHECK(*right == s_thr);
    }

    SUBCASE("below the minimum of g there is no solution") {
        const double v0 = 2.0;
        const double i_t = v0 - g_of(kParams, s_thr);
        CHECK_FALSE(s_on_level(kParams, v0, i_t + 0.1, Branch::Left).has_value());
        CHECK_FALSE(s_on_level(kParams, v0, i_t + 0.1, Branch::Right).has_value());
    }

    SUBCASE("branch ordering straddles the threshold") {
        const double v0 = 3.0;
        const auto left = s_on_level(kParams, v0, 0.5, Branch::Left);
        const auto right = s_on_level(kParams, v0, 0.5, Branch::Right);
        REQUIRE(left.has_value());
        REQUIRE(right.has_value());
        CHECK(*left <= s_thr);
        CHECK(*right >= s_thr);
        CHECK(*left < *right);
    }

    SUBCASE("round-trip s -> i_on_level -> s_on_level recovers s") {
        testing::Rng rng(0x9A9E);
        for (int k = 0; k < 1000; ++k) {
            const SirParams p(rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0));
            const double thr = p.gamma() / p.beta();
            const double s = thr * std::exp(rng.uniform(-6.0, 3.0));
            if (std::abs(s / thr - 1.0) < 1e-6)
                continue; // tangency itself is covered above
            const double v0 = rng.uniform(-2.0, 6.0);
            const double i = i_on_level(p, v0, s);
            const Branch branch = (s < thr) ? Branch::Left : Branch::Right;
            const auto rec = s_on_level(p, v0, i, branch);
            REQUIRE(rec.has_value());
            CHECK(std::abs(*rec - s) <= 1e-10 * s);
        }
    }

    SUBCASE("non-finite inputs are rejected") {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        const double inf = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS((void)s_on_level(kParams, nan, 0.5, Branch::Left),
                        NonFiniteInput);
        CHECK_THROWS_AS((void)s_on_level(kParams, 1.0, inf, Branch::Right),
                        NonFiniteInput);
    }
}

TEST_CASE("i_on_level attains its maximum at the threshold") {
    const double s_thr = kParams.gamma() / kParams.beta();
    const double v0 = 2.5;
    const double peak = i_on_level(kParams, v0, s_thr);
    testing::Rng rng(0x11A);
    for (int k = 0; k < 300; ++k)
        CHECK(i_on_level(kParams, v0, s_thr * std::exp(rng.uniform(-4.0, 4.0))) <= peak);
}

TEST_CASE("trace_level_curve") {
    SUBCASE("two points trace exactly the endpoints") {
        const LevelCurve lc = trace_level_curve(kParams, 2.0, 0.1, 0.9, 2);
        REQUIRE(lc.points.size() == 2);
        CHECK(lc.points.front().s == 0.1);
        CHECK(lc.points.back().s == 0.9);
        CHECK(lc.v0 == 2.0);
        CHECK(lc.s_min == 0.1);
        CHECK(lc.s_max == 0.9);
    }

    SUBCASE("every point satisfies the level equation to 1e-12") {
        const double v0 = 2.0;
        const LevelCurve lc = trace_level_curve(kParams, v0, 1e-3, 5.0, 400);
        REQUIRE(lc.points.size() == 400);
        const double scale = std::max(1.0, std::abs(v0));
        for (const auto& pt : lc.points) {
            CHECK(pt.s > 0.0);
            CHECK(std::abs(pt.i + g_of(kParams, pt.s) - v0) <= 1e-12 * scale);
            CHECK(pt.feasible == (pt.i >= 0.0));
        }
        // This range includes infeasible wings on both sides.
        CHECK_FALSE(lc.points.front().feasible);
        CHECK_FALSE(lc.points.back().feasible);
        bool any_feasible = false;
        for (const auto& pt : lc.points)
            any_feasible = any_feasible || pt.feasible;
        CHECK(any_feasible);
    }

    SUBCASE("spacing is geometric") {
        const LevelCurve lc = trace_level_curve(kParams, 2.0, 0.01, 1.0, 50);
        const double ratio = lc.points[1].s / lc.points[0].s;
        for (std::size_t k = 2; k < lc.points.size(); ++k)
            CHECK(lc.points[k].s / lc.points[k - 1].s ==
                  doctest::Approx(ratio).epsilon(1e-9));
    }

    SUBCASE("trajectory samples lie on the curve within km_tol") {
        const Trajectory tr = integrate(kParams, kInit, 100.0);
        const double v0 = level_value(kParams, kInit);
        const double scale = std::max(1.0, std::abs(v0));
        for (int k = 0; k <= 200; ++k) {
            const double t = (k == 200) ? 100.0 : 100.0 * k / 200.0;
            const SirState x = tr.sample(t).core;
            CHECK(std::abs(i_on_level(kParams, v0, x.s()) - x.i()) <= 1e-7 * scale);
        }
    }

    SUBCASE("invalid ranges") {
        CHECK_THROWS_AS((void)trace_level_curve(kParams, 2.0, 0.5, 0.5, 10),
                        InvalidRange);
        CHECK_THROWS_AS((void)trace_level_curve(kParams, 2.0, 0.9, 0.1, 10),
                        InvalidRange);
        CHECK_THROWS_AS((void)trace_level_curve(kParams, 2.0, 0.0, 0.5, 10),
                        InvalidRange);
        CHECK_THROWS_AS((void)trace_level_curve(kParams, 2.0, -0.1, 0.5, 10),
                        InvalidRange);
        CHECK_THROWS_AS((void)trace_level_curve(kParams, 2.0, 0.1, 0.5, 1),
                        InvalidRange);
        CHECK_THROWS_AS((void)trace_level_curve(
                            kParams, std::numeric_limits<double>::quiet_NaN(), 0.1,
                            0.5, 10),
                        InvalidRange);
    }
}
