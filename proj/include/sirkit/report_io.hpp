#pragma once

/// @file report_io.hpp
/// File formats: trajectory CSV (full-precision, round-trippable), the
/// run-report JSON (schema_version 1), and level-curve CSV.
///
/// Trajectory values are written with 17 significant digits, which is enough
/// for binary64 to round-trip exactly: a report recomputed from the CSV via
/// Trajectory::from_nodes reproduces the original verdicts bit for bit.

#include <string>

#include <json.hpp>

#include "sirkit/integrator.hpp"
#include "sirkit/invariants.hpp"
#include "sirkit/phase_plane.hpp"
#include "sirkit/scenario.hpp"

namespace sirkit {

/// CSV with header "t,s,i,r,p_i,g_i" and one row per accepted node.
std::string trajectory_to_csv(const Trajectory& tr);
void write_trajectory_csv(const std::string& path, const Trajectory& tr);

/// Rebuilds a trajectory from a CSV produced by write_trajectory_csv (or any
/// file matching the schema). Throws ParseError naming the line on malformed
/// input, including structural problems (times not increasing, nonzero
/// initial integrals).
Trajectory read_trajectory_csv(const std::string& path, const SirParams& params);

/// Assembles the full report: scenario echo, integration summary, invariant
/// checks, threshold analysis, and representation residuals.
nlohmann::ordered_json build_report(const Trajectory& tr,
                                    const nlohmann::ordered_json& scenario_echo,
                                    const MonitorConfig& mcfg = {});

/// True when any check in the report failed (strict-mode gate). Skipped
/// checks do not count.
bool report_has_failure(const nlohmann::ordered_json& report);

/// CSV with header "s,i,feasible" (feasible as 0/1).
std::string level_curve_to_csv(const LevelCurve& curve);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sirkit
