#include "sirkit/model.hpp"

#include <cmath>
#include <stdexcept>

namespace sirkit {

SirParams::SirParams(double beta, double gamma) : beta_(beta), gamma_(gamma) {
    if (!std::isfinite(beta) || !std::isfinite(gamma)) {
        throw NonFiniteParameter("SIR parameters must be finite");
    }
    if (!(beta > 0.0)) {
        throw NonPositiveParameter("beta", beta);
    }
    if (!(gamma > 0.0)) {
        throw NonPositiveParameter("gamma", gamma);
    }
}

SirParams validate_params(double beta, double gamma) { return SirParams(beta, gamma); }

SirState::SirState(double s, double i, double r) : s_(s), i_(i), r_(r) {
    if (!std::isfinite(s) || !std::isfinite(i) || !std::isfinite(r)) {
        throw NonFiniteInput("SIR state fields must be finite");
    }
}

Derivative vector_field(const SirParams& p, const SirState& x) {
    Derivative d;
    detail::sir_rhs(p, x.s(), x.i(), d.ds, d.di, d.dr);
    return d;
}

double total_population(const SirState& x) noexcept { return x.s() + x.i() + x.r(); }

bool in_simplex(const SirState& x, double n, double tol) {
    if (tol < 0.0 || std::isnan(tol)) {
        throw NegativeTolerance("simplex tolerance must be nonnegative");
    }
    if (!(n >= 0.0)) {
        throw std::invalid_argument("simplex population must be nonnegative");
    }
    if (x.s() < -tol || x.i() < -tol || x.r() < -tol) {
        return false;
    }
    const double scale = n > 1.0 ? n : 1.0;
    return std::abs(total_population(x) - n) <= tol * scale;
}

}  // namespace sirkit
