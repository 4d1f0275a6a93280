#include "sirkit/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sirkit/errors.hpp"

namespace sirkit {
namespace {

// Dormand-Prince 5(4) tableau. Stage 7 equals the 5th-order solution (FSAL),
// so its derivative doubles as stage 1 of the next step and as the stored
// node derivative.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0;
constexpr double kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0, kA63 = 46732.0 / 5247.0;
constexpr double kA64 = 49.0 / 176.0, kA65 = -5103.0 / 18656.0;
constexpr double kA71 = 35.0 / 384.0, kA73 = 500.0 / 1113.0, kA74 = 125.0 / 192.0;
constexpr double kA75 = -2187.0 / 6784.0, kA76 = 11.0 / 84.0;

// Error weights: 5th-order minus embedded 4th-order coefficients.
constexpr double kE1 = 71.0 / 57600.0, kE3 = -71.0 / 16695.0, kE4 = 71.0 / 1920.0;
constexpr double kE5 = -17253.0 / 339200.0, kE6 = 22.0 / 525.0, kE7 = -1.0 / 40.0;

// Weights of the quartic term in the method's classical dense output. The
// dense polynomial equals the cubic Hermite plus th^2*(1-th)^2 * h * (sum of
// these times the stages), so that term, largest at th = 1/2, measures how far
// the Hermite interpolant sits from the 5th-order-accurate one. Folding it
// into step acceptance keeps dense samples as trustworthy as the nodes,
// which the sampled invariant checks rely on.
constexpr double kD1 = -12715105075.0 / 11282082432.0;
constexpr double kD3 = 87487479700.0 / 32700410799.0;
constexpr double kD4 = -10690763975.0 / 1880347072.0;
constexpr double kD5 = 701980252875.0 / 199316789632.0;
constexpr double kD6 = -1453857185.0 / 822651844.0;
constexpr double kD7 = 69997945.0 / 29380423.0;

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 5.0;
// Hairer's PI exponents for DOPRI5: h_new = h * safety * errold^b / err^a.
constexpr double kAlpha = 0.17;
constexpr double kBeta = 0.04;
constexpr double kErrFloor = 1e-4;

// The method's stability polynomial stays within (0, 1] on [-3, 0] of the
// real axis (it first leaves the unit disc near -3.31 and stays positive
// throughout), so capping h * rho there keeps linearized decay modes not just
// stable but sign-preserving. The cap is tightened to 2.5 because the cubic
// Hermite of e^{-z*th} needs z/(1 - e^{-z}) <= 3 (the Fritsch-Carlson
// monotone box) to be monotone across the step, which bounds z by about
// 2.82. Together these keep compartments positive and monotone through long
// post-epidemic tails, at nodes and at dense samples alike, instead of
// ringing at the absolute-tolerance scale.
constexpr double kStabilitySpan = 2.5;

using Vec5 = std::array<double, 5>;

void aug_rhs(const SirParams& p, const Vec5& y, Vec5& f) noexcept {
    detail::sir_rhs(p, y[0], y[1], f[0], f[1], f[2]);
    f[3] = y[1];
    f[4] = p.beta() * y[0] - p.gamma();
}

Trajectory::Node make_node(double t, const Vec5& y, const Vec5& f) {
    Trajectory::Node n;
    n.t = t;
    n.y = AugmentedState{SirState(y[0], y[1], y[2]), y[3], y[4]};
    n.f = f;
    return n;
}

Vec5 to_vec(const AugmentedState& a) noexcept {
    return {a.core.s(), a.core.i(), a.core.r(), a.p_i, a.g_i};
}

}  // namespace

IntegratorConfig resolve_config(const IntegratorConfig& cfg, double t_end) {
    if (!std::isfinite(t_end) || t_end <= 0.0)
        throw std::invalid_argument("integrate: t_end must be positive and finite");
    IntegratorConfig r = cfg;
    if (r.h_init <= 0.0) r.h_init = 1e-3 * t_end;
    if (r.h_max <= 0.0) r.h_max = t_end / 10.0;
    if (!std::isfinite(r.rtol) || r.rtol <= 0.0)
        throw std::invalid_argument("integrate: rtol must be positive and finite");
    if (!std::isfinite(r.atol) || r.atol <= 0.0)
        throw std::invalid_argument("integrate: atol must be positive and finite");
    if (!std::isfinite(r.h_init) || r.h_init <= 0.0)
        throw std::invalid_argument("integrate: h_init must be positive and finite");
    if (!std::isfinite(r.h_max) || r.h_max < r.h_init)
        throw std::invalid_argument("integrate: h_max must be finite and at least h_init");
    if (r.max_steps == 0) throw std::invalid_argument("integrate: max_steps must be positive");
    return r;
}

Trajectory::Trajectory(SirParams params, std::vector<Node> nodes, Stats stats)
    : params_(params), nodes_(std::move(nodes)), stats_(stats) {}

Trajectory Trajectory::from_nodes(const SirParams& params,
                                  const std::vector<std::pair<double, AugmentedState>>& nodes) {
    if (nodes.size() < 2)
        throw std::invalid_argument("Trajectory::from_nodes: need at least two nodes");
    if (nodes.front().first != 0.0)
        throw std::invalid_argument("Trajectory::from_nodes: first node must be at t = 0");
    if (nodes.front().second.p_i != 0.0 || nodes.front().second.g_i != 0.0)
        throw std::invalid_argument(
            "Trajectory::from_nodes: cumulative integrals must start at zero");

    std::vector<Node> built;
    built.reserve(nodes.size());
    double prev_t = -1.0;
    for (const auto& [t, y] : nodes) {
        if (!std::isfinite(t) || t <= prev_t)
            throw std::invalid_argument(
                "Trajectory::from_nodes: node times must be finite and strictly increasing");
        prev_t = t;
        Vec5 yv = to_vec(y);
        Vec5 f;
        aug_rhs(params, yv, f);
        built.push_back(make_node(t, yv, f));
    }

    Stats stats;
    stats.accepted_steps = built.size() - 1;
    return Trajectory(params, std::move(built), stats);
}

AugmentedState Trajectory::sample(double t) const {
    if (!(t >= 0.0) || t > t_end()) throw TimeOutOfRange(t, 0.0, t_end());

    auto it = std::partition_point(nodes_.begin(), nodes_.end(),
                                   [t](const Node& n) { return n.t < t; });
    if (it != nodes_.end() && it->t == t) return it->y;

    const Node& n0 = *(it - 1);
    const Node& n1 = *it;
    const double h = n1.t - n0.t;
    const double th = (t - n0.t) / h;
    const double u = 1.0 - th;

    // Newton form of the cubic Hermite: every term scales with the change
    // over the step or with h * f, so constant data reproduces the node value
    // bit for bit and flat tails pick up no evaluation noise.
    const Vec5 y0 = to_vec(n0.y);
    const Vec5 y1 = to_vec(n1.y);
    Vec5 y;
    for (std::size_t j = 0; j < 5; ++j) {
        const double dy = y1[j] - y0[j];
        const double c3 = h * n0.f[j] - dy;
        const double c4 = dy - h * n1.f[j] - c3;
        y[j] = y0[j] + th * (dy + u * (c3 + th * c4));
    }
    return AugmentedState{SirState(y[0], y[1], y[2]), y[3], y[4]};
}

Trajectory integrate(const SirParams& p, const SirState& init, double t_end,
                     const IntegratorConfig& cfg) {
    if (init.s() < 0.0 || init.i() < 0.0 || init.r() < 0.0)
        throw NegativeInitialData(init.s(), init.i(), init.r());
    const IntegratorConfig rc = resolve_config(cfg, t_end);

    Vec5 y{init.s(), init.i(), init.r(), 0.0, 0.0};
    Vec5 f;
    aug_rhs(p, y, f);

    std::vector<Trajectory::Node> nodes;
    nodes.push_back(make_node(0.0, y, f));

    Trajectory::Stats stats;
    double t = 0.0;
    double h = std::min(rc.h_init, rc.h_max);
    double err_prev = kErrFloor;

    Vec5 k2, k3, k4, k5, k6, ytmp, ynew, fnew;

    while (t < t_end) {
        if (stats.accepted_steps + stats.rejected_steps >= rc.max_steps)
            throw StepBudgetExhausted(rc.max_steps, t);

        const double rho =
            p.beta() * (std::max(y[0], 0.0) + std::max(y[1], 0.0)) + p.gamma();
        h = std::min(h, kStabilitySpan / rho);

        bool last = false;
        if (h >= t_end - t) {
            h = t_end - t;
            last = true;
        }
        if (!(h > 0.0) || t + h == t) throw StepUnderflow(h, t);

        for (std::size_t j = 0; j < 5; ++j) ytmp[j] = y[j] + h * (kA21 * f[j]);
        aug_rhs(p, ytmp, k2);
        for (std::size_t j = 0; j < 5; ++j)
            ytmp[j] = y[j] + h * (kA31 * f[j] + kA32 * k2[j]);
        aug_rhs(p, ytmp, k3);
        for (std::size_t j = 0; j < 5; ++j)
            ytmp[j] = y[j] + h * (kA41 * f[j] + kA42 * k2[j] + kA43 * k3[j]);
        aug_rhs(p, ytmp, k4);
        for (std::size_t j = 0; j < 5; ++j)
            ytmp[j] = y[j] + h * (kA51 * f[j] + kA52 * k2[j] + kA53 * k3[j] + kA54 * k4[j]);
        aug_rhs(p, ytmp, k5);
        for (std::size_t j = 0; j < 5; ++j)
            ytmp[j] = y[j] +
                      h * (kA61 * f[j] + kA62 * k2[j] + kA63 * k3[j] + kA64 * k4[j] +
                           kA65 * k5[j]);
        aug_rhs(p, ytmp, k6);
        for (std::size_t j = 0; j < 5; ++j)
            ynew[j] = y[j] +
                      h * (kA71 * f[j] + kA73 * k3[j] + kA74 * k4[j] + kA75 * k5[j] +
                           kA76 * k6[j]);
        aug_rhs(p, ynew, fnew);

        double sum_step = 0.0;
        double sum_dense = 0.0;
        for (std::size_t j = 0; j < 5; ++j) {
            const double e = h * (kE1 * f[j] + kE3 * k3[j] + kE4 * k4[j] + kE5 * k5[j] +
                                  kE6 * k6[j] + kE7 * fnew[j]);
            const double d = (h / 16.0) * (kD1 * f[j] + kD3 * k3[j] + kD4 * k4[j] +
                                           kD5 * k5[j] + kD6 * k6[j] + kD7 * fnew[j]);
            const double sc =
                rc.atol + rc.rtol * std::max(std::abs(y[j]), std::abs(ynew[j]));
            sum_step += (e / sc) * (e / sc);
            sum_dense += (d / sc) * (d / sc);
        }
        const double err = std::sqrt(std::max(sum_step, sum_dense) / 5.0);

        if (std::isfinite(err) && err <= 1.0) {
            ++stats.accepted_steps;
            t = last ? t_end : t + h;
            y = ynew;
            f = fnew;
            nodes.push_back(make_node(t, y, f));

            double fac = kMaxFactor;
            if (err > 0.0)
                fac = std::clamp(
                    kSafety * std::pow(err_prev, kBeta) / std::pow(err, kAlpha),
                    kMinFactor, kMaxFactor);
            h = std::min(h * fac, rc.h_max);
            err_prev = std::max(err, kErrFloor);
        } else {
            ++stats.rejected_steps;
            double fac = kMinFactor;
            if (std::isfinite(err))
                fac = std::clamp(kSafety / std::pow(err, kAlpha), kMinFactor, 1.0);
            h *= fac;
        }
    }

    return Trajectory(p, std::move(nodes), stats);
}

std::vector<AugmentedState> refine_convergence(const SirParams& p, const SirState& init,
                                               double t_end,
                                               std::span<const IntegratorConfig> cfgs) {
    if (cfgs.empty())
        throw std::invalid_argument("refine_convergence: need at least one config");
    for (std::size_t k = 1; k < cfgs.size(); ++k)
        if (!(cfgs[k].rtol < cfgs[k - 1].rtol))
            throw std::invalid_argument("refine_convergence: rtol must be strictly decreasing");

    std::vector<AugmentedState> endpoints;
    endpoints.reserve(cfgs.size());
    for (const auto& cfg : cfgs) endpoints.push_back(integrate(p, init, t_end, cfg).endpoint());
    return endpoints;
}

}  // namespace sirkit
