#pragma once

/// @file cli.hpp
/// Subcommand drivers behind the sirkit executable. Exit codes: 0 success,
/// 2 config/input parse error, 3 integration failure, 4 (with --strict) at
/// least one invariant check failed. Invariant failures alone do not change
/// the exit code: monitoring is the product, and --strict opts into
/// CI-gating semantics.
///
/// SIRKIT_DEFAULT_TOL, when set, replaces the default rtol for simulate;
/// an rtol given in the config still wins.

#include <array>
#include <cstddef>
#include <iostream>
#include <optional>
#include <string>

namespace sirkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitIntegration = 3;
inline constexpr int kExitStrictFailure = 4;

struct SimulateOptions {
    std::string config_path;
    std::string out_dir;
    bool strict = false;
    std::optional<std::size_t> samples;  // monitor n_samples override
};

/// Writes out_dir/trajectory.csv and out_dir/report.json.
int run_simulate(const SimulateOptions& opt, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr);

struct CheckOptions {
    std::string trajectory_path;
    double beta = 0.0;
    double gamma = 0.0;
    bool strict = false;
};

/// Re-runs the invariant suite on a stored trajectory; writes report.json
/// into the current directory.
int run_check(const CheckOptions& opt, std::ostream& out = std::cout,
              std::ostream& err = std::cerr);

struct LevelCurveOptions {
    double beta = 0.0;
    double gamma = 0.0;
    std::optional<double> v0;
    std::optional<std::array<double, 3>> from_init;  // (s, i, r)
    double s_min = 0.0;
    double s_max = 0.0;
    std::size_t n_points = 0;
    std::string out_path;
};

/// Writes the traced level curve as CSV to out_path.
int run_levelcurve(const LevelCurveOptions& opt, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr);

}  // namespace sirkit
