// Command-line front end: experiment batteries, parameter sweeps, standalone
// IGD evaluation and Pareto-front reference export.
//
// Exit codes: 0 success, 1 at least one failed run (or a runtime error),
// 2 bad command line or config.

#include "dermeda/benchmarks.hpp"
#include "dermeda/harness.hpp"
#include "dermeda/metrics.hpp"
#include "dermeda/pf_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

constexpr int kExitFailedRun = 1;
constexpr int kExitConfig = 2;
constexpr const char* kOutputEnv = "DERMEDA_OUTPUT_DIR";

void apply_output_override(dermeda::ExperimentSpec& spec, const std::string& cli_out)
{
    if (!cli_out.empty()) {
        spec.output_dir = cli_out;
    } else if (const char* env = std::getenv(kOutputEnv); env != nullptr && *env != '\0') {
        spec.output_dir = env;
    }
}

void print_summary(const std::vector<dermeda::SummaryRow>& rows)
{
    for (const auto& r : rows) {
        std::cout << r.problem << ' ' << r.algorithm << " mean_igd=" << dermeda::format_number(r.mean_igd)
                  << " std_igd=" << dermeda::format_number(r.std_igd);
        if (r.failed > 0) {
            std::cout << " failed=" << r.failed;
        }
        std::cout << '\n';
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"DE/RM-MEDA multi-objective optimizer and experiment harness"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    bool timing = false;

    auto* run_cmd = app.add_subcommand("run", "Run the experiment battery described by a config file");
    run_cmd->add_option("--config", config_path, "INI experiment file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--workers", workers, "Concurrent runs")->check(CLI::PositiveNumber);
    run_cmd->add_option("--out", out_dir, "Output directory (overrides config and $DERMEDA_OUTPUT_DIR)");
    run_cmd->add_flag("--timing", timing, "Fill mean_wall_ms in summary.csv (output no longer reproducible)");

    std::string sweep_param, sweep_values;
    auto* sweep_cmd = app.add_subcommand("sweep", "Re-run a battery over values of one parameter");
    sweep_cmd->add_option("--config", config_path, "INI experiment file")->required()->check(CLI::ExistingFile);
    sweep_cmd->add_option("--param", sweep_param, "K | alpha_beta | dim")->required();
    sweep_cmd->add_option("--values", sweep_values, "e.g. 3,5,7 or 0.1:0.7,0.3:0.6")->required();
    sweep_cmd->add_option("--workers", workers, "Concurrent runs")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", out_dir, "Output directory");
    sweep_cmd->add_flag("--timing", timing, "Record wall time");

    std::string approx_path, reference_path;
    auto* igd_cmd = app.add_subcommand("igd", "IGD of an approximation set against a reference front");
    igd_cmd->add_option("--approx", approx_path, "Objective vectors, one per row (CSV or whitespace)")
        ->required()
        ->check(CLI::ExistingFile);
    igd_cmd->add_option("--reference", reference_path, "Reference front file")->required()->check(CLI::ExistingFile);

    std::string problem_name;
    std::size_t pf_points = 0;
    std::string pf_out;
    auto* pf_cmd = app.add_subcommand("pf", "Export a sampled true Pareto front");
    pf_cmd->add_option("--problem", problem_name, "F1..F9")->required();
    pf_cmd->add_option("--points", pf_points, "Number of points (default 500, 1000 for F6)");
    pf_cmd->add_option("--out", pf_out, "Output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run_cmd) {
            auto spec = dermeda::load_experiment(config_path);
            apply_output_override(spec, out_dir);
            const auto result = dermeda::run_experiment(spec, {workers, timing, true});
            print_summary(result.summary);
            for (const auto& r : result.runs) {
                if (!r.ok) {
                    std::cerr << r.run_id << " failed: " << r.error << '\n';
                }
            }
            std::cout << "wrote " << (spec.output_dir / "summary.csv").string() << '\n';
            return result.failed_runs() > 0 ? kExitFailedRun : 0;
        }
        if (*sweep_cmd) {
            auto spec = dermeda::load_experiment(config_path);
            apply_output_override(spec, out_dir);
            const auto param = dermeda::parse_sweep_parameter(sweep_param);
            if (!param) {
                std::cerr << "unknown sweep parameter '" << sweep_param << "' (expected K, alpha_beta or dim)\n";
                return kExitConfig;
            }
            const auto values = dermeda::parse_sweep_values(*param, sweep_values);
            const auto rows = dermeda::sweep(spec, *param, values, {workers, timing, true});
            std::size_t failed = 0;
            for (const auto& r : rows) {
                std::cout << r.parameter << '=' << r.value << ' ' << r.summary.problem << ' ' << r.summary.algorithm
                          << " mean_igd=" << dermeda::format_number(r.summary.mean_igd) << '\n';
                failed += r.summary.failed;
            }
            return failed > 0 ? kExitFailedRun : 0;
        }
        if (*igd_cmd) {
            const auto approx = dermeda::read_points(approx_path);
            const auto reference = dermeda::read_points(reference_path);
            std::cout << dermeda::format_number(dermeda::igd(approx, reference)) << '\n';
            return 0;
        }
        if (*pf_cmd) {
            const auto id = dermeda::parse_problem_id(problem_name);
            if (!id) {
                std::cerr << "unknown problem '" << problem_name << "'\n";
                return kExitConfig;
            }
            const auto ref = dermeda::sample_true_pf(*id, pf_points > 0 ? pf_points : dermeda::default_pf_size(*id));
            if (pf_out.empty()) {
                dermeda::write_points(std::cout, ref.points);
            } else {
                dermeda::write_points(pf_out, ref.points);
            }
            return 0;
        }
    } catch (const dermeda::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailedRun;
    }
    return 0;
}
