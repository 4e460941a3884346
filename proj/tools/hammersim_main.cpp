#include "hammersim/commands.hpp"
#include "hammersim/errors.hpp"
#include "hammersim/profile.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw hammersim::FormatError("cannot write output file " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hammersim: command-level DRAM read-disturb simulator"};
    app.require_subcommand(1);

    std::string config_path;
    auto* simulate = app.add_subcommand("simulate", "run one trace or attack and write a report");
    simulate->add_option("--config", config_path, "simulation config (JSON)")->required();

    std::string sweep_config_path, sweep_param, sweep_out;
    std::vector<std::string> sweep_values;
    std::vector<std::uint64_t> sweep_seeds;
    auto* sweep = app.add_subcommand("sweep", "rerun a config across parameter values, emit CSV");
    sweep->add_option("--config", sweep_config_path, "simulation config (JSON)")->required();
    sweep->add_option("--param", sweep_param, "one of: para_p, refresh_k, iterations")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--seeds", sweep_seeds, "comma-separated seeds")->required()->delimiter(',');
    sweep->add_option("--out", sweep_out, "CSV output path (default: config output, else stdout)");

    std::vector<double> analyze_p;
    std::vector<std::uint64_t> analyze_n;
    std::uint64_t analyze_trials = 100000, analyze_seed = 0;
    std::string analyze_out;
    auto* analyze = app.add_subcommand(
        "analyze", "cross-validate the PARA survival model (CSV: p,N,analytic,empirical,abs_error)");
    analyze->add_option("--p", analyze_p, "comma-separated trigger probabilities")
        ->required()
        ->delimiter(',');
    analyze->add_option("--n", analyze_n, "comma-separated adjacent-close counts")
        ->required()
        ->delimiter(',');
    analyze->add_option("--trials", analyze_trials, "Monte Carlo trials per grid point");
    analyze->add_option("--seed", analyze_seed, "RNG seed");
    analyze->add_option("--out", analyze_out, "CSV output path (default stdout)");

    hammersim::ProfileGenParams gen;
    hammersim::Geometry gen_geom;
    std::string gen_out;
    auto* gen_profile = app.add_subcommand("gen-profile", "generate a random vulnerability profile");
    gen_profile->add_option("--cells", gen.cells, "number of vulnerable cells")->required();
    gen_profile->add_option("--t-min", gen.t_min, "minimum hammer threshold");
    gen_profile->add_option("--t-max", gen.t_max, "maximum hammer threshold");
    gen_profile->add_option("--seed", gen.seed, "RNG seed");
    gen_profile->add_option("--out", gen_out, "profile output path")->required();
    gen_profile->add_option("--banks", gen_geom.banks, "bank count the profile targets");
    gen_profile->add_option("--rows", gen_geom.rows_per_bank, "rows per bank");
    gen_profile->add_option("--row-bits", gen_geom.row_size_bits, "bits per row");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            const hammersim::Config config = hammersim::load_config(config_path);
            const hammersim::SimulateResult result = hammersim::cmd_simulate(config);
            write_output(result.report_json, config.output.path);
            return result.exit_code;
        }
        if (sweep->parsed()) {
            const hammersim::Config config = hammersim::load_config(sweep_config_path);
            hammersim::SweepRequest request{sweep_param, sweep_values, sweep_seeds};
            const std::string csv = hammersim::cmd_sweep(config, request);
            const std::string out = !sweep_out.empty()           ? sweep_out
                                    : config.output.format == "csv" ? config.output.path
                                                                    : std::string{};
            write_output(csv, out);
            return hammersim::kExitOk;
        }
        if (analyze->parsed()) {
            hammersim::AnalyzeRequest request{analyze_p, analyze_n, analyze_trials, analyze_seed};
            write_output(hammersim::cmd_analyze(request), analyze_out);
            return hammersim::kExitOk;
        }
        if (gen_profile->parsed()) {
            gen_geom.page_size_bits = gen_geom.row_size_bits;
            const auto profile = hammersim::generate_profile(gen, gen_geom);
            hammersim::save_profile(profile, gen_out);
            return hammersim::kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "hammersim: " << e.what() << "\n";
        return hammersim::kExitError;
    }
    return hammersim::kExitError;
}
