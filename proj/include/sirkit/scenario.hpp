#pragma once

/// @file scenario.hpp
/// Machine-readable scenario configs: a flat JSON object with the model
/// parameters, initial data, window, and optional integrator/monitor
/// overrides. Unknown keys are errors (fail-closed) to catch typos in
/// tolerance names. Optional fields remember whether they were set, so the
/// scenario echo in reports round-trips byte-identically: serializing emits
/// exactly the explicitly-set keys, in a fixed canonical order.

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "sirkit/integrator.hpp"
#include "sirkit/invariants.hpp"
#include "sirkit/model.hpp"

namespace sirkit {

struct Scenario {
    double beta = 0.0;
    double gamma = 0.0;
    double s0 = 0.0;
    double i0 = 0.0;
    double r0 = 0.0;
    double t_end = 0.0;

    std::optional<double> rtol;
    std::optional<double> atol;
    std::optional<double> h_init;
    std::optional<double> h_max;
    std::optional<std::size_t> max_steps;

    std::optional<double> cons_tol;
    std::optional<double> sign_tol;
    std::optional<double> mono_slack;
    std::optional<double> km_tol;
    std::optional<double> s_floor;
    std::optional<std::size_t> n_samples;

    SirParams params() const { return SirParams(beta, gamma); }
    SirState init() const { return SirState(s0, i0, r0); }
    IntegratorConfig integrator_config() const;
    MonitorConfig monitor_config() const;
};

/// Parses and validates a flat JSON scenario. Violations (syntax, unknown or
/// missing keys, wrong types, out-of-domain values) throw ParseError with a
/// message naming the offending field.
Scenario parse_scenario(const std::string& json_text);

/// parse_scenario on a file's contents; unreadable file throws ParseError.
Scenario load_scenario(const std::string& path);

/// Canonical serialization: required fields first, then every explicitly-set
/// optional, in a fixed order. parse(serialize(x)) == x and the bytes are
/// stable under the round trip.
nlohmann::ordered_json scenario_to_json(const Scenario& sc);

}  // namespace sirkit
