#pragma once

#include "hammersim/geometry.hpp"
#include "hammersim/policy.hpp"

#include <cstdint>

namespace hammersim {

/// (1-p)^N with a log-space companion for values past double underflow.
struct SurvivalResult {
    double probability = 1.0;
    double log10_probability = 0.0; ///< -inf when p = 1 and N > 0
};

/// Probability that a victim receives zero PARA refreshes across N adjacent
/// row closes, each an independent Bernoulli(p) trial.
SurvivalResult para_survival(double p, std::uint64_t n_closes);

/// Analytic window model for the refresh-rate mitigation.
struct WindowModel {
    Ns t_refw = 64'000'000;
    Ns t_rc = 50;
    std::uint32_t k = 1;
};

/// Maximum same-bank activations an attacker fits between two consecutive
/// refreshes of a victim row: floor((t_refw / k) / t_rc).
std::uint64_t max_hammers_per_window(const WindowModel& w);

/// Smallest integer multiplier k such that the shrunken window admits fewer
/// than t_min activations. Throws DomainError for t_min = 0: no finite
/// refresh rate protects a zero-threshold cell.
std::uint32_t min_safe_multiplier(const WindowModel& w, std::uint64_t t_min);

/// Monte Carlo cross-check of para_survival through the real PARA hook:
/// `trials` micro-runs of one victim and N aggressor closes each, counting
/// runs where the victim was never refreshed.
struct ParaValidation {
    double analytic = 1.0;
    double empirical = 1.0;
    double abs_error = 0.0;
};

ParaValidation validate_para_model(double p, std::uint64_t n_closes, std::uint64_t trials,
                                   std::uint64_t seed);

} // namespace hammersim
