#include <array>
#include <vector>

#include <CLI11.hpp>

#include "sirkit/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"sirkit: numerical companion to the verified SIR theorem package"};
    app.require_subcommand(1);

    sirkit::SimulateOptions sim;
    std::size_t sim_samples = 0;
    auto* simulate = app.add_subcommand(
        "simulate", "Integrate a scenario and write trajectory.csv + report.json");
    simulate->add_option("--config", sim.config_path, "Scenario JSON file")->required();
    simulate->add_option("--out", sim.out_dir, "Output directory")->required();
    simulate->add_flag("--strict", sim.strict, "Exit 4 if any invariant check fails");
    auto* samples_opt =
        simulate->add_option("--samples", sim_samples, "Monitor sample count override");

    sirkit::CheckOptions chk;
    auto* check =
        app.add_subcommand("check", "Re-run the invariant suite on a stored trajectory CSV");
    check->add_option("--trajectory", chk.trajectory_path, "trajectory.csv to check")
        ->required();
    check->add_option("--beta", chk.beta, "Transmission rate")->required();
    check->add_option("--gamma", chk.gamma, "Recovery rate")->required();
    check->add_flag("--strict", chk.strict, "Exit 4 if any invariant check fails");

    sirkit::LevelCurveOptions lvl;
    double lvl_v0 = 0.0;
    std::vector<double> lvl_init;
    auto* levelcurve =
        app.add_subcommand("levelcurve", "Trace a Kermack-McKendrick level curve to CSV");
    levelcurve->add_option("--beta", lvl.beta, "Transmission rate")->required();
    levelcurve->add_option("--gamma", lvl.gamma, "Recovery rate")->required();
    auto* v0_opt = levelcurve->add_option("--v0", lvl_v0, "Level value");
    auto* init_opt = levelcurve
                         ->add_option("--from-init", lvl_init,
                                      "Initial state S I R; the level through it")
                         ->expected(3);
    v0_opt->excludes(init_opt);
    init_opt->excludes(v0_opt);
    levelcurve->add_option("--s-min", lvl.s_min, "Lower S bound")->required();
    levelcurve->add_option("--s-max", lvl.s_max, "Upper S bound")->required();
    levelcurve->add_option("--n", lvl.n_points, "Number of points")->required();
    levelcurve->add_option("--out", lvl.out_path, "Output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? sirkit::kExitOk : sirkit::kExitParse;
    }

    if (simulate->parsed()) {
        if (samples_opt->count() > 0) sim.samples = sim_samples;
        return sirkit::run_simulate(sim);
    }
    if (check->parsed()) return sirkit::run_check(chk);

    if (v0_opt->count() > 0) lvl.v0 = lvl_v0;
    if (init_opt->count() > 0) lvl.from_init = std::array<double, 3>{lvl_init[0], lvl_init[1], lvl_init[2]};
    return sirkit::run_levelcurve(lvl);
}
