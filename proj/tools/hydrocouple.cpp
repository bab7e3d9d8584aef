#include "hydrocouple/cases.hpp"
#include "hydrocouple/errors.hpp"
#include "hydrocouple/io.hpp"
#include "hydrocouple/verify/criteria.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>

namespace hc = hydrocouple;

namespace {

struct RunArgs {
    int case_id = 0;
    std::string mode;
    std::optional<double> scale;
    std::optional<double> end_time;
    std::string out = ".";
    std::string config;
};

hc::SimConfig resolve(const RunArgs& a) {
    hc::SimConfig cfg;
    if (!a.config.empty()) {
        cfg = hc::parse_config(a.config);
        if (a.case_id != 0) {
            throw hc::ConfigError("--case and --config are mutually exclusive");
        }
        if (!a.mode.empty()) {
            cfg.mode = hc::parse_mode(a.mode);
        }
    } else {
        if (a.case_id == 0 || a.mode.empty()) {
            throw hc::ConfigError("run needs --case and --mode, or --config");
        }
        hc::CaseSpec spec;
        spec.id = a.case_id;
        spec.mode = hc::parse_mode(a.mode);
        cfg = hc::build_case(spec);
    }
    if (a.scale) {
        cfg.scale = *a.scale;
    }
    if (a.end_time) {
        cfg.end_time = *a.end_time;
    }
    cfg.validate();
    return cfg;
}

int run_command(const RunArgs& a) {
    const hc::SimConfig cfg = resolve(a);
    const std::filesystem::path out(a.out);
    std::filesystem::create_directories(out);
    const hc::RunResult r = hc::run(cfg);
    hc::write_probes((out / "probes.csv").string(), cfg.domain.probes, r.records);
    hc::write_snapshot((out / "snapshot.csv").string(), r.mesh, r.field2d, r.channel);
    hc::write_config((out / "config.ini").string(), cfg);
    std::cout << "mode " << hc::to_string(cfg.mode) << ", t = " << cfg.end_time << " s, "
              << r.steps << " steps, " << std::fixed << std::setprecision(2) << r.wall_seconds
              << " s wall\n"
              << std::scientific << std::setprecision(6) << "volume " << r.initial_volume
              << " -> " << r.final_volume << '\n'
              << "wrote " << (out / "probes.csv").string() << " and "
              << (out / "snapshot.csv").string() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupled 1D channel / 2D floodplain shallow-water solver"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Run a benchmark case or a configuration file");
    run->add_option("--case", run_args.case_id, "Case id")->check(CLI::Range(1, 3));
    run->add_option("--mode", run_args.mode, "full2d, hcm or fbm")
        ->check(CLI::IsMember({"full2d", "hcm", "fbm"}));
    run->add_option("--scale", run_args.scale, "Grid resolution factor in (0, 1]");
    run->add_option("--end-time", run_args.end_time, "End time in seconds");
    run->add_option("--out", run_args.out, "Output directory");
    run->add_option("--config", run_args.config, "Configuration file")->check(CLI::ExistingFile);

    int show_id = 1;
    std::string show_mode = "hcm";
    CLI::App* show = app.add_subcommand("show-case", "Print the configuration of a benchmark case");
    show->add_option("--case", show_id, "Case id")->required()->check(CLI::Range(1, 3));
    show->add_option("--mode", show_mode, "full2d, hcm or fbm")
        ->check(CLI::IsMember({"full2d", "hcm", "fbm"}));

    hc::verify::Options verify_opts;
    std::vector<int> only;
    CLI::App* verify = app.add_subcommand("verify", "Run the property and acceptance checks");
    verify->add_option("--only", only, "Criterion ids to run");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            return run_command(run_args);
        }
        if (*show) {
            hc::CaseSpec spec;
            spec.id = show_id;
            spec.mode = hc::parse_mode(show_mode);
            hc::write_config(std::cout, hc::build_case(spec));
            return 0;
        }
        if (*verify) {
            verify_opts.only = only;
            const auto results = hc::verify::run_all(verify_opts, &std::cout);
            return hc::verify::all_passed(results) ? 0 : 1;
        }
    } catch (const hc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
