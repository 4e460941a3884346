#include "hammersim/commands.hpp"

#include "hammersim/analysis.hpp"
#include "hammersim/controller.hpp"
#include "hammersim/errors.hpp"

#include <json.hpp>

#include <cinttypes>
#include <cstdio>

namespace hammersim {

using nlohmann::json;

namespace {

std::vector<Request> config_trace(const Config& config) {
    if (config.trace_path)
        return load_trace(*config.trace_path);
    const PageMap pages = config.page_map.value_or(PageMap{});
    return generate_trace(*config.attack, config.geometry, pages);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

} // namespace

SimulateResult cmd_simulate(const Config& config) {
    SimulateResult result;
    const std::vector<Request> trace = config_trace(config);
    const PageMap* pages = config.page_map ? &*config.page_map : nullptr;
    result.report = run_trace(trace, config.geometry, config.remap, config.timing, config.policy,
                              config.profile, pages);

    json doc;
    doc["schema"] = 1;
    doc["report"] = json::parse(report_to_json_text(result.report));
    if (pages) {
        result.scored = true;
        result.breach = isolation_breach_report(result.report, *pages);
        doc["breach"] = json::parse(breach_report_to_json_text(result.breach));
        if (result.breach.breaches > 0)
            result.exit_code = kExitBreach;
    }
    result.report_json = doc.dump(2) + "\n";
    return result;
}

std::string cmd_sweep(const Config& config, const SweepRequest& sweep) {
    if (sweep.values.empty())
        throw UsageError("sweep: need at least one value");
    if (sweep.seeds.empty())
        throw UsageError("sweep: need at least one seed");
    if (sweep.param != "para_p" && sweep.param != "refresh_k" && sweep.param != "iterations")
        throw UsageError("sweep: unknown param '" + sweep.param +
                         "' (expected para_p, refresh_k, or iterations)");
    if (sweep.param == "iterations" && !config.attack)
        throw UsageError("sweep: param 'iterations' needs an attack config");

    std::string csv = "value,seed,flips,breaches,activations,periodic_refreshes,para_refreshes\n";
    for (const std::string& value : sweep.values) {
        for (std::uint64_t seed : sweep.seeds) {
            Config run = config;
            if (sweep.param == "para_p") {
                double p = 0.0;
                try {
                    p = std::stod(value);
                } catch (const std::exception&) {
                    throw UsageError("sweep: bad para_p value '" + value + "'");
                }
                if (!(p >= 0.0 && p <= 1.0))
                    throw UsageError("sweep: para_p value must be in [0,1]");
                run.policy = MitigationPolicy::para(p, seed);
            } else if (sweep.param == "refresh_k") {
                std::uint32_t k = 0;
                try {
                    k = static_cast<std::uint32_t>(std::stoul(value));
                } catch (const std::exception&) {
                    throw UsageError("sweep: bad refresh_k value '" + value + "'");
                }
                if (k < 1)
                    throw UsageError("sweep: refresh_k value must be >= 1");
                run.policy = MitigationPolicy::increased_refresh(k);
            } else {
                std::uint64_t iterations = 0;
                try {
                    iterations = std::stoull(value);
                } catch (const std::exception&) {
                    throw UsageError("sweep: bad iterations value '" + value + "'");
                }
                run.attack->iterations = iterations;
            }
            if (run.attack && run.attack->kind == AttackKind::RandomBaseline)
                run.attack->seed = seed;
            if (run.policy.kind == MitigationKind::Para && sweep.param != "para_p")
                run.policy.rng_seed = seed;

            const SimulateResult sim = cmd_simulate(run);
            const std::uint64_t breaches = sim.scored ? sim.breach.breaches : 0;
            char row[256];
            std::snprintf(row, sizeof row,
                          "%s,%" PRIu64 ",%zu,%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 "\n",
                          value.c_str(), seed, sim.report.flips.size(), breaches,
                          sim.report.activations, sim.report.periodic_refreshes,
                          sim.report.para_refreshes);
            csv += row;
        }
    }
    return csv;
}

std::string cmd_analyze(const AnalyzeRequest& request) {
    if (request.trials < 1)
        throw UsageError("analyze: trials must be >= 1");
    if (request.p_values.empty() || request.n_values.empty())
        throw UsageError("analyze: need at least one p and one N");
    for (double p : request.p_values)
        if (!(p >= 0.0 && p <= 1.0))
            throw UsageError("analyze: p values must be in [0,1]");

    std::string csv = "p,N,analytic,empirical,abs_error\n";
    for (double p : request.p_values) {
        for (std::uint64_t n : request.n_values) {
            const ParaValidation v = validate_para_model(p, n, request.trials, request.seed);
            char row[192];
            std::snprintf(row, sizeof row, "%s,%" PRIu64 ",%.6e,%.6e,%.6e\n",
                          format_double(p).c_str(), n, v.analytic, v.empirical, v.abs_error);
            csv += row;
        }
    }
    return csv;
}

} // namespace hammersim
