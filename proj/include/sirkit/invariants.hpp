#pragma once

/// @file invariants.hpp
/// Sampled checks of every proved qualitative invariant along a trajectory:
/// conservation, nonnegativity, bounds, S/R monotonicity, Kermack-McKendrick
/// invariant constancy, and simplex containment.
///
/// Every check evaluates the trajectory at n_samples uniform times plus all
/// accepted-step node times, so corruption sitting exactly on a node cannot
/// slip between grid points.
///
/// Honesty note: a check certifies its invariant at the sampled points only,
/// which is why the sampling density is part of the report.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "sirkit/integrator.hpp"

namespace sirkit {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus status) noexcept;

/// Outcome of one invariant check. worst_residual semantics are
/// per check (documented at each function); worst_t is where the worst
/// residual occurred. A Skipped check carries its reason in note and never
/// fails a report.
struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    double worst_residual = 0.0;
    double worst_t = 0.0;
    double tolerance_used = 0.0;
    std::string note;

    bool passed() const noexcept { return status != CheckStatus::Fail; }
};

/// Tolerances for the monitor, an order looser than the integrator defaults
/// so violations indicate real faults. s_floor and n_samples default to 0,
/// meaning "derive from the trajectory": s_floor = 1e-9 * max(1, N) and
/// n_samples = max(1000, 4 * accepted_steps).
struct MonitorConfig {
    double cons_tol = 1e-9;
    double sign_tol = 1e-9;
    double mono_slack = 1e-12;
    double km_tol = 1e-7;
    double s_floor = 0.0;
    std::size_t n_samples = 0;
};

/// Fills in the trajectory-derived defaults and validates (tolerances > 0,
/// n_samples >= 2). Throws std::invalid_argument on violation.
MonitorConfig resolve_monitor(const MonitorConfig& cfg, const Trajectory& tr);

struct InvariantReport {
    std::vector<CheckRecord> checks;
    std::size_t n_samples = 0;
    bool overall = false;
};

/// "conservation": worst |S+I+R-N| / max(1,N) over samples; pass iff
/// <= cons_tol.
CheckRecord check_conservation(const Trajectory& tr, const MonitorConfig& cfg = {});

/// "nonnegativity": worst (most negative) min(S,I,R) over samples; pass iff
/// >= -sign_tol * max(1,N).
CheckRecord check_nonnegativity(const Trajectory& tr, const MonitorConfig& cfg = {});

/// "bounds": worst excess max(-X, X-N) / max(1,N) over samples and
/// compartments X; pass iff <= sign_tol.
CheckRecord check_bounds(const Trajectory& tr, const MonitorConfig& cfg = {});

/// "s_nonincreasing" and "r_nondecreasing": worst rise of S (resp. drop of R)
/// between consecutive samples; each passes iff <= mono_slack * max(1,N).
std::array<CheckRecord, 2> check_monotonicity(const Trajectory& tr,
                                              const MonitorConfig& cfg = {});

/// Kermack-McKendrick invariant V = I + S - (gamma/beta) ln S, in the paper's
/// S_* = 1 coordinate convention. Requires S > 0; throws NonpositiveS.
double km_value(const SirParams& p, const SirState& x);

/// "km_constancy": worst |V(t) - V(0)| / max(1, |V(0)|) over samples with
/// S(t) > s_floor; pass iff <= km_tol. Skipped (with reason) when
/// S(0) <= s_floor, mirroring the theorem's S(a) > 0 hypothesis.
CheckRecord check_km_constancy(const Trajectory& tr, const MonitorConfig& cfg = {});

/// All checks above plus "simplex": the smallest tolerance that would satisfy
/// in_simplex at the worst sample; pass iff <= cons_tol. overall is the
/// conjunction of per-check passes (Skipped does not fail).
InvariantReport run_all(const Trajectory& tr, const MonitorConfig& cfg = {});

namespace detail {

/// Sorted evaluation times used by the sampled checks: n uniform times over
/// [0, t_end] merged with the trajectory's node times (duplicates removed).
std::vector<double> monitor_sample_times(const Trajectory& tr, std::size_t n);

}  // namespace detail

}  // namespace sirkit
