#pragma once

#include "hammersim/attacks.hpp"
#include "hammersim/config.hpp"
#include "hammersim/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hammersim {

/// Exit-code contract shared by the CLI: 0 clean, 1 error, 2 breach detected.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBreach = 2;

struct SimulateResult {
    SimReport report;
    BreachReport breach;   ///< meaningful only when `scored` is true
    bool scored = false;   ///< page map present, breach report produced
    std::string report_json; ///< the document written to the output target
    int exit_code = kExitOk;
};

/// Runs the configured trace or attack and renders the report document.
SimulateResult cmd_simulate(const Config& config);

struct SweepRequest {
    std::string param; ///< para_p | refresh_k | iterations
    std::vector<std::string> values;
    std::vector<std::uint64_t> seeds;
};

/// One run per (value, seed) in input order. Returns CSV with header
/// value,seed,flips,breaches,activations,periodic_refreshes,para_refreshes.
std::string cmd_sweep(const Config& config, const SweepRequest& sweep);

struct AnalyzeRequest {
    std::vector<double> p_values;
    std::vector<std::uint64_t> n_values;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Cross-validates the PARA survival model over the (p, N) grid. Returns CSV
/// with header p,N,analytic,empirical,abs_error.
std::string cmd_analyze(const AnalyzeRequest& request);

} // namespace hammersim
