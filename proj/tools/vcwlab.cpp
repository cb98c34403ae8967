#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "vcw/config.hpp"
#include "vcw/error.hpp"
#include "vcw/scenario.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kSolverError = 3;

int run(const std::string& config_path, const std::string& out_flag,
        const std::string& scenario_flag) {
    vcw::RunConfig cfg;
    try {
        cfg = vcw::load_config(config_path);
        if (!scenario_flag.empty()) cfg.scenario = vcw::parse_scenario(scenario_flag);
    } catch (const vcw::Error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return e.code() == vcw::ErrorCode::IoError || e.is_config_error() ? kConfigError
                                                                           : kSolverError;
    }

    // --out beats VCWLAB_OUT_DIR beats the config file.
    std::string out_dir = cfg.out_dir;
    if (const char* env = std::getenv("VCWLAB_OUT_DIR"); env != nullptr && *env != '\0') {
        out_dir = env;
    }
    if (!out_flag.empty()) out_dir = out_flag;

    try {
        vcw::ScenarioResult result = vcw::run_scenario(cfg);
        vcw::write_outputs(result.report, result.streams, out_dir);
        const auto& report = result.report;
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " measured="
                      << vcw::format_number(c.measured)
                      << " threshold=" << vcw::format_number(c.threshold) << '\n';
        }
        if (report.error) std::cerr << "solver error: " << *report.error << '\n';
        std::cout << "wrote " << report.manifest.size() << " files to " << out_dir << " in "
                  << report.wall_seconds << " s\n";
        return vcw::exit_code(report);
    } catch (const vcw::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.is_config_error() ? kConfigError : kSolverError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Viscous contact wave experiments for the 1D inflow problem"};
    app.require_subcommand(1);

    std::string config_path, out_dir, scenario;
    auto* run_cmd = app.add_subcommand("run", "Run the scenario described by a config file");
    run_cmd->add_option("--config", config_path, "Flat key = value config file")
        ->required()
        ->check(CLI::ExistingFile);
    run_cmd->add_option("--out", out_dir, "Output directory (overrides VCWLAB_OUT_DIR)");
    run_cmd->add_option("--scenario", scenario, "Override the scenario named in the config");

    app.add_subcommand("defaults", "Print the default config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }

    if (app.got_subcommand("defaults")) {
        std::cout << vcw::to_config_text(vcw::RunConfig{});
        return 0;
    }
    return run(config_path, out_dir, scenario);
}
