#include "sirkit/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sirkit/errors.hpp"

namespace sirkit {
namespace {

using nlohmann::json;

double as_positive(const json& v, const std::string& key) {
    if (!v.is_number())
        throw ParseError("config: field '" + key + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d) || d <= 0.0)
        throw ParseError("config: field '" + key + "' must be strictly positive, got " +
                         detail::fmt(d));
    return d;
}

double as_nonnegative(const json& v, const std::string& key) {
    if (!v.is_number())
        throw ParseError("config: field '" + key + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d) || d < 0.0)
        throw ParseError("config: field '" + key + "' must be nonnegative, got " +
                         detail::fmt(d));
    return d;
}

std::size_t as_count(const json& v, const std::string& key, std::size_t min_value) {
    unsigned long long n = 0;
    if (v.is_number_unsigned()) {
        n = v.get<unsigned long long>();
    } else if (v.is_number_integer()) {
        const auto s = v.get<long long>();
        if (s < 0)
            throw ParseError("config: field '" + key + "' must be a nonnegative integer");
        n = static_cast<unsigned long long>(s);
    } else {
        throw ParseError("config: field '" + key + "' must be a nonnegative integer");
    }
    if (n < min_value)
        throw ParseError("config: field '" + key + "' must be at least " +
                         std::to_string(min_value));
    return static_cast<std::size_t>(n);
}

}  // namespace

IntegratorConfig Scenario::integrator_config() const {
    IntegratorConfig c;
    if (rtol) c.rtol = *rtol;
    if (atol) c.atol = *atol;
    if (h_init) c.h_init = *h_init;
    if (h_max) c.h_max = *h_max;
    if (max_steps) c.max_steps = *max_steps;
    return c;
}

MonitorConfig Scenario::monitor_config() const {
    MonitorConfig c;
    if (cons_tol) c.cons_tol = *cons_tol;
    if (sign_tol) c.sign_tol = *sign_tol;
    if (mono_slack) c.mono_slack = *mono_slack;
    if (km_tol) c.km_tol = *km_tol;
    if (s_floor) c.s_floor = *s_floor;
    if (n_samples) c.n_samples = *n_samples;
    return c;
}

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config: top level must be a JSON object");

    Scenario sc;
    bool seen[6] = {};
    static const char* required[6] = {"beta", "gamma", "s0", "i0", "r0", "t_end"};

    for (const auto& [key, value] : doc.items()) {
        if (key == "beta") {
            sc.beta = as_positive(value, key);
            seen[0] = true;
        } else if (key == "gamma") {
            sc.gamma = as_positive(value, key);
            seen[1] = true;
        } else if (key == "s0") {
            sc.s0 = as_nonnegative(value, key);
            seen[2] = true;
        } else if (key == "i0") {
            sc.i0 = as_nonnegative(value, key);
            seen[3] = true;
        } else if (key == "r0") {
            sc.r0 = as_nonnegative(value, key);
            seen[4] = true;
        } else if (key == "t_end") {
            sc.t_end = as_positive(value, key);
            seen[5] = true;
        } else if (key == "rtol") {
            sc.rtol = as_positive(value, key);
        } else if (key == "atol") {
            sc.atol = as_positive(value, key);
        } else if (key == "h_init") {
            sc.h_init = as_positive(value, key);
        } else if (key == "h_max") {
            sc.h_max = as_positive(value, key);
        } else if (key == "max_steps") {
            sc.max_steps = as_count(value, key, 1);
        } else if (key == "cons_tol") {
            sc.cons_tol = as_positive(value, key);
        } else if (key == "sign_tol") {
            sc.sign_tol = as_positive(value, key);
        } else if (key == "mono_slack") {
            sc.mono_slack = as_positive(value, key);
        } else if (key == "km_tol") {
            sc.km_tol = as_positive(value, key);
        } else if (key == "s_floor") {
            sc.s_floor = as_positive(value, key);
        } else if (key == "n_samples") {
            sc.n_samples = as_count(value, key, 2);
        } else {
            throw ParseError("config: unknown key '" + key + "'");
        }
    }

    for (int k = 0; k < 6; ++k)
        if (!seen[k])
            throw ParseError(std::string("config: missing required key '") + required[k] + "'");

    if (sc.h_init && sc.h_max && *sc.h_max < *sc.h_init)
        throw ParseError("config: field 'h_max' must be at least h_init");
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("config: cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

nlohmann::ordered_json scenario_to_json(const Scenario& sc) {
    nlohmann::ordered_json j;
    j["beta"] = sc.beta;
    j["gamma"] = sc.gamma;
    j["s0"] = sc.s0;
    j["i0"] = sc.i0;
    j["r0"] = sc.r0;
    j["t_end"] = sc.t_end;
    if (sc.rtol) j["rtol"] = *sc.rtol;
    if (sc.atol) j["atol"] = *sc.atol;
    if (sc.h_init) j["h_init"] = *sc.h_init;
    if (sc.h_max) j["h_max"] = *sc.h_max;
    if (sc.max_steps) j["max_steps"] = *sc.max_steps;
    if (sc.cons_tol) j["cons_tol"] = *sc.cons_tol;
    if (sc.sign_tol) j["sign_tol"] = *sc.sign_tol;
    if (sc.mono_slack) j["mono_slack"] = *sc.mono_slack;
    if (sc.km_tol) j["km_tol"] = *sc.km_tol;
    if (sc.s_floor) j["s_floor"] = *sc.s_floor;
    if (sc.n_samples) j["n_samples"] = *sc.n_samples;
    return j;
}

}  // namespace sirkit
