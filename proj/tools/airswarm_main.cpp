#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "airswarm/errors.hpp"
#include "airswarm/metrics.hpp"
#include "airswarm/scenario.hpp"
#include "airswarm/simulation.hpp"
#include "airswarm/trace_io.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

int cmd_validate(const std::string& scenario_path) {
    const airswarm::Scenario sc = airswarm::load_scenario(scenario_path);
    std::cout << "ok: " << sc.name << " (" << sc.airships.size() << " airships, "
              << sc.duration_s << " s)\n";
    return kExitOk;
}

int cmd_run(const std::string& scenario_path, std::optional<std::uint64_t> seed,
            std::string out_dir) {
    const airswarm::Scenario sc = airswarm::load_scenario(scenario_path);
    if (out_dir.empty()) out_dir = sc.name + "_out";
    const airswarm::Trace trace = airswarm::run_simulation(sc, seed);
    const airswarm::MetricsSummary metrics =
        airswarm::compute_metrics(trace, sc.metrics_transient_s);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);
    airswarm::write_csv(trace, dir / "trace.csv");
    airswarm::write_metrics(metrics, dir / "metrics.json");
    airswarm::write_svg(trace, dir / "trajectory.svg");

    std::cout << "wrote " << (dir / "trace.csv").string() << " (" << trace.records.size()
              << " records)\n";
    std::cout << "swarm-centre error: mean " << airswarm::format_serialized(metrics.swarm_centre.mean_m)
              << " m, std " << airswarm::format_serialized(metrics.swarm_centre.std_m) << " m, max "
              << airswarm::format_serialized(metrics.swarm_centre.max_m) << " m\n";
    for (std::size_t i = 0; i < metrics.per_airship.size(); ++i) {
        const airswarm::MetricStats& s = metrics.per_airship[i];
        std::cout << "airship " << i << " error: mean " << airswarm::format_serialized(s.mean_m)
                  << " m, std " << airswarm::format_serialized(s.std_m) << " m, max "
                  << airswarm::format_serialized(s.max_m) << " m\n";
    }
    return kExitOk;
}

int cmd_metrics(const std::string& trace_path, double transient_s) {
    const airswarm::Trace trace = airswarm::read_trace_csv(trace_path);
    const airswarm::MetricsSummary metrics = airswarm::compute_metrics(trace, transient_s);
    airswarm::write_metrics(metrics, std::cout);
    return kExitOk;
}

int cmd_plot(const std::string& trace_path, const std::string& svg_path) {
    const airswarm::Trace trace = airswarm::read_trace_csv(trace_path);
    airswarm::write_svg(trace, fs::path(svg_path));
    std::cout << "wrote " << svg_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"airswarm: deterministic multi-airship guidance and swarm simulation"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir;
    std::uint64_t seed_value = 0;
    auto* run = app.add_subcommand("run", "Run a scenario and write trace/metrics/plot");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();
    auto* seed_opt = run->add_option("--seed", seed_value, "override the scenario seed");
    run->add_option("--out", out_dir, "output directory (default <scenario>_out)");

    std::string v_scenario;
    auto* validate = app.add_subcommand("validate", "Validate a scenario file");
    validate->add_option("scenario", v_scenario, "scenario JSON file")->required();

    std::string m_trace;
    double m_transient = 0.0;
    auto* metrics = app.add_subcommand("metrics", "Recompute metrics from a trace CSV");
    metrics->add_option("trace", m_trace, "trace CSV file")->required();
    metrics->add_option("--transient", m_transient, "skip records before this time [s]");

    std::string p_trace;
    std::string p_svg;
    auto* plot = app.add_subcommand("plot", "Render a trajectory SVG from a trace CSV");
    plot->add_option("trace", p_trace, "trace CSV file")->required();
    plot->add_option("--svg", p_svg, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(validate)) return cmd_validate(v_scenario);
        if (app.got_subcommand(run)) {
            std::optional<std::uint64_t> seed;
            if (seed_opt->count() > 0) seed = seed_value;
            return cmd_run(scenario_path, seed, out_dir);
        }
        if (app.got_subcommand(metrics)) return cmd_metrics(m_trace, m_transient);
        if (app.got_subcommand(plot)) return cmd_plot(p_trace, p_svg);
    } catch (const airswarm::ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const airswarm::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
