#include "sirkit/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <stdexcept>

#include "sirkit/errors.hpp"
#include "sirkit/invariants.hpp"
#include "sirkit/phase_plane.hpp"
#include "sirkit/report_io.hpp"
#include "sirkit/scenario.hpp"

namespace sirkit {
namespace {

std::optional<double> env_default_rtol() {
    const char* raw = std::getenv("SIRKIT_DEFAULT_TOL");
    if (raw == nullptr) return std::nullopt;
    const std::string text(raw);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v) || v <= 0.0)
        throw ParseError("SIRKIT_DEFAULT_TOL must be a positive tolerance, got '" + text + "'");
    return v;
}

void write_report(const std::string& path, const nlohmann::ordered_json& report) {
    write_text_file(path, report.dump(2) + "\n");
}

std::string summary_line(const nlohmann::ordered_json& report) {
    const auto& inv = report.at("invariants");
    std::size_t failed = 0, skipped = 0;
    for (const auto& rec : inv.at("checks")) {
        if (rec.at("status") == "fail") ++failed;
        if (rec.at("status") == "skipped") ++skipped;
    }
    std::string line = "invariants: ";
    line += inv.at("overall").get<bool>() ? "pass" : "FAIL";
    line += " (" + std::to_string(inv.at("checks").size()) + " checks, " +
            std::to_string(failed) + " failed, " + std::to_string(skipped) + " skipped, " +
            std::to_string(inv.at("n_samples").get<std::size_t>()) + " samples)";
    return line;
}

}  // namespace

int run_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
    Scenario sc;
    IntegratorConfig icfg;
    MonitorConfig mcfg;
    try {
        sc = load_scenario(opt.config_path);
        icfg = sc.integrator_config();
        if (!sc.rtol) {
            if (const auto env_rtol = env_default_rtol()) icfg.rtol = *env_rtol;
        }
        icfg = resolve_config(icfg, sc.t_end);
        mcfg = sc.monitor_config();
        if (opt.samples) {
            if (*opt.samples < 2) throw ParseError("--samples must be at least 2");
            mcfg.n_samples = *opt.samples;
        }
    } catch (const Error& e) {
        err << "sirkit: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "sirkit: config: " << e.what() << '\n';
        return kExitParse;
    }

    std::optional<Trajectory> tr;
    try {
        tr.emplace(integrate(sc.params(), sc.init(), sc.t_end, icfg));
    } catch (const Error& e) {
        err << "sirkit: integration failed: " << e.what() << '\n';
        return kExitIntegration;
    }

    nlohmann::ordered_json report;
    try {
        report = build_report(*tr, scenario_to_json(sc), mcfg);
        std::filesystem::create_directories(opt.out_dir);
        const auto dir = std::filesystem::path(opt.out_dir);
        write_trajectory_csv((dir / "trajectory.csv").string(), *tr);
        write_report((dir / "report.json").string(), report);
    } catch (const std::exception& e) {
        err << "sirkit: " << e.what() << '\n';
        return kExitParse;
    }

    out << summary_line(report) << '\n';
    if (opt.strict && report_has_failure(report)) return kExitStrictFailure;
    return kExitOk;
}

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    nlohmann::ordered_json report;
    try {
        const SirParams p(opt.beta, opt.gamma);
        const Trajectory tr = read_trajectory_csv(opt.trajectory_path, p);

        Scenario echo;
        echo.beta = opt.beta;
        echo.gamma = opt.gamma;
        echo.s0 = tr.init().s();
        echo.i0 = tr.init().i();
        echo.r0 = tr.init().r();
        echo.t_end = tr.t_end();
        report = build_report(tr, scenario_to_json(echo));
        write_report("report.json", report);
    } catch (const Error& e) {
        err << "sirkit: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        err << "sirkit: " << e.what() << '\n';
        return kExitParse;
    }

    out << summary_line(report) << '\n';
    if (opt.strict && report_has_failure(report)) return kExitStrictFailure;
    return kExitOk;
}

int run_levelcurve(const LevelCurveOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const SirParams p(opt.beta, opt.gamma);
        double v0 = 0.0;
        if (opt.v0) {
            v0 = *opt.v0;
        } else if (opt.from_init) {
            const auto& [s, i, r] = *opt.from_init;
            try {
                v0 = level_value(p, SirState(s, i, r));
            } catch (const NonpositiveS&) {
                err << "sirkit: --from-init requires S(a) > 0 (the KM invariant is not "
                       "stated for S(a) = 0), got S = "
                    << s << '\n';
                return kExitParse;
            }
        } else {
            err << "sirkit: one of --v0 or --from-init is required\n";
            return kExitParse;
        }

        const LevelCurve curve = trace_level_curve(p, v0, opt.s_min, opt.s_max, opt.n_points);
        write_text_file(opt.out_path, level_curve_to_csv(curve));
        out << "level curve: v0 = " << v0 << ", " << curve.points.size() << " points -> "
            << opt.out_path << '\n';
    } catch (const Error& e) {
        err << "sirkit: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitOk;
}

}  // namespace sirkit
