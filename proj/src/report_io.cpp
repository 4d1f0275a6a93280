#include "sirkit/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sirkit/errors.hpp"
#include "sirkit/representations.hpp"
#include "sirkit/threshold.hpp"

namespace sirkit {
namespace {

using nlohmann::ordered_json;

constexpr char kCsvHeader[] = "t,s,i,r,p_i,g_i";

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_field(const std::string& text, std::size_t line_no, const char* what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("trajectory: line " + std::to_string(line_no) + ": bad " + what +
                         " value '" + text + "'");
    return v;
}

ordered_json check_to_json(const CheckRecord& rec) {
    ordered_json j;
    j["name"] = rec.name;
    j["status"] = to_string(rec.status);
    j["pass"] = rec.passed();
    j["worst_residual"] = rec.worst_residual;
    j["worst_t"] = rec.worst_t;
    j["tolerance_used"] = rec.tolerance_used;
    if (!rec.note.empty()) j["note"] = rec.note;
    return j;
}

ordered_json state_to_json(double t, const AugmentedState& x) {
    ordered_json j;
    j["t"] = t;
    j["s"] = x.core.s();
    j["i"] = x.core.i();
    j["r"] = x.core.r();
    j["p_i"] = x.p_i;
    j["g_i"] = x.g_i;
    return j;
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& tr) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& node : tr.nodes()) {
        out += fmt17(node.t);
        out += ',';
        out += fmt17(node.y.core.s());
        out += ',';
        out += fmt17(node.y.core.i());
        out += ',';
        out += fmt17(node.y.core.r());
        out += ',';
        out += fmt17(node.y.p_i);
        out += ',';
        out += fmt17(node.y.g_i);
        out += '\n';
    }
    return out;
}

void write_trajectory_csv(const std::string& path, const Trajectory& tr) {
    write_text_file(path, trajectory_to_csv(tr));
}

Trajectory read_trajectory_csv(const std::string& path, const SirParams& params) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("trajectory: cannot read '" + path + "'");

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("trajectory: empty file '" + path + "'");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader)
        throw ParseError("trajectory: line 1: expected header '" + std::string(kCsvHeader) +
                         "', got '" + line + "'");

    std::vector<std::pair<double, AugmentedState>> nodes;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::string fields[6];
        std::size_t n_fields = 0;
        std::size_t start = 0;
        for (std::size_t pos = 0; pos <= line.size(); ++pos) {
            if (pos == line.size() || line[pos] == ',') {
                if (n_fields == 6)
                    throw ParseError("trajectory: line " + std::to_string(line_no) +
                                     ": expected 6 columns");
                fields[n_fields++] = line.substr(start, pos - start);
                start = pos + 1;
            }
        }
        if (n_fields != 6)
            throw ParseError("trajectory: line " + std::to_string(line_no) +
                             ": expected 6 columns, got " + std::to_string(n_fields));

        const double t = parse_field(fields[0], line_no, "t");
        const double s = parse_field(fields[1], line_no, "s");
        const double i = parse_field(fields[2], line_no, "i");
        const double r = parse_field(fields[3], line_no, "r");
        const double p_i = parse_field(fields[4], line_no, "p_i");
        const double g_i = parse_field(fields[5], line_no, "g_i");
        if (!std::isfinite(p_i) || !std::isfinite(g_i))
            throw ParseError("trajectory: line " + std::to_string(line_no) +
                             ": integral columns must be finite");
        try {
            nodes.emplace_back(t, AugmentedState{SirState(s, i, r), p_i, g_i});
        } catch (const NonFiniteInput& e) {
            throw ParseError("trajectory: line " + std::to_string(line_no) + ": " + e.what());
        }
    }

    try {
        return Trajectory::from_nodes(params, nodes);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("trajectory: ") + e.what());
    }
}

nlohmann::ordered_json build_report(const Trajectory& tr, const ordered_json& scenario_echo,
                                    const MonitorConfig& mcfg) {
    const MonitorConfig rc = resolve_monitor(mcfg, tr);
    const SirParams& p = tr.params();
    const double n_pop = total_population(tr.init());

    ordered_json report;
    report["schema_version"] = 1;
    report["scenario"] = scenario_echo;

    ordered_json integration;
    integration["accepted_steps"] = tr.stats().accepted_steps;
    integration["rejected_steps"] = tr.stats().rejected_steps;
    integration["n_nodes"] = tr.nodes().size();
    integration["t_end"] = tr.t_end();
    integration["population"] = n_pop;
    integration["endpoint"] = state_to_json(tr.t_end(), tr.endpoint());
    report["integration"] = integration;

    const InvariantReport inv = run_all(tr, rc);
    ordered_json invariants;
    invariants["overall"] = inv.overall;
    invariants["n_samples"] = inv.n_samples;
    invariants["checks"] = ordered_json::array();
    for (const auto& rec : inv.checks) invariants["checks"].push_back(check_to_json(rec));
    report["invariants"] = invariants;

    const ThresholdClassification cls = analyze_thresholds(tr, rc);
    ordered_json threshold;
    threshold["r_init"] = cls.r_init;
    threshold["r0_dfe"] = p.beta() * n_pop / p.gamma();
    threshold["r_eff_end"] = r_eff(p, tr.endpoint().core);
    threshold["initial_verdict"] = to_string(cls.initial_verdict);
    threshold["i_monotone_checked"] = cls.i_monotone_checked;
    threshold["i_nonincreasing"] = check_to_json(check_i_monotone_subthreshold(tr, rc));
    if (cls.crossing) {
        ordered_json crossing;
        crossing["t_star"] = cls.crossing->t_star;
        crossing["s_at"] = cls.crossing->s_at;
        crossing["i_prime_at"] = cls.crossing->i_prime_at;
        threshold["crossing"] = crossing;
    } else {
        threshold["crossing"] = nullptr;
    }
    report["threshold"] = threshold;

    const RepresentationResidual rep = representation_residuals(tr, rc.n_samples);
    ordered_json representations;
    representations["n_samples"] = rc.n_samples;
    representations["max_rel_error_s"] = rep.max_rel_error_s;
    representations["argmax_t_s"] = rep.argmax_t_s;
    representations["max_rel_error_i"] = rep.max_rel_error_i;
    representations["argmax_t_i"] = rep.argmax_t_i;
    report["representations"] = representations;

    return report;
}

bool report_has_failure(const nlohmann::ordered_json& report) {
    for (const auto& rec : report.at("invariants").at("checks"))
        if (rec.at("status") == "fail") return true;
    return report.at("threshold").at("i_nonincreasing").at("status") == "fail";
}

std::string level_curve_to_csv(const LevelCurve& curve) {
    std::string out = "s,i,feasible\n";
    for (const auto& pt : curve.points) {
        out += fmt17(pt.s);
        out += ',';
        out += fmt17(pt.i);
        out += ',';
        out += pt.feasible ? '1' : '0';
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
    if (!out) throw ParseError("failed writing '" + path + "'");
}

}  // namespace sirkit
