#include "hammersim/analysis.hpp"

#include "hammersim/controller.hpp"
#include "hammersim/disturbance.hpp"
#include "hammersim/errors.hpp"
#include "hammersim/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hammersim {

SurvivalResult para_survival(double p, std::uint64_t n_closes) {
    if (!(p >= 0.0 && p <= 1.0))
        throw RangeError("para_survival: p must be in [0,1]");
    SurvivalResult out;
    if (p == 0.0 || n_closes == 0)
        return out; // empty product
    if (p == 1.0) {
        out.probability = 0.0;
        out.log10_probability = -std::numeric_limits<double>::infinity();
        return out;
    }
    const double log_survival = static_cast<double>(n_closes) * std::log1p(-p);
    out.probability = std::exp(log_survival);
    out.log10_probability = log_survival / std::numbers::ln10;
    return out;
}

std::uint64_t max_hammers_per_window(const WindowModel& w) {
    if (w.t_rc == 0 || w.k == 0)
        throw RangeError("max_hammers_per_window: t_rc and k must be positive");
    // floor(floor(t_refw/k)/t_rc) == floor(t_refw/(k*t_rc))
    return w.t_refw / (static_cast<std::uint64_t>(w.k) * w.t_rc);
}

std::uint32_t min_safe_multiplier(const WindowModel& w, std::uint64_t t_min) {
    if (t_min == 0)
        throw DomainError("min_safe_multiplier: no finite k protects a zero-threshold cell");
    if (w.t_rc == 0)
        throw RangeError("min_safe_multiplier: t_rc must be positive");
    // smallest k with floor(t_refw/(k*t_rc)) < t_min, i.e. t_refw < k*t_rc*t_min
    const std::uint64_t k = w.t_refw / (w.t_rc * t_min) + 1;
    if (k > UINT32_MAX)
        throw DomainError("min_safe_multiplier: required multiplier exceeds 32 bits");
    return static_cast<std::uint32_t>(k);
}

ParaValidation validate_para_model(double p, std::uint64_t n_closes, std::uint64_t trials,
                                   std::uint64_t seed) {
    if (trials < 1)
        throw UsageError("validate_para_model: trials must be >= 1");
    ParaValidation out;
    out.analytic = para_survival(p, n_closes).probability;

    // Micro-run: aggressor row 1, victim row 0, in a minimal 3-row bank.
    // Each trial issues n_closes closes of the aggressor through the real
    // PARA hook and checks whether the victim's window ever restarted.
    Geometry geom;
    geom.banks = 1;
    geom.rows_per_bank = 3;
    geom.row_size_bits = 8;
    geom.page_size_bits = 8;
    const MitigationPolicy policy = MitigationPolicy::para(p, seed);
    const RowAddress aggressor{0, 1};
    const RowAddress victim{0, 0};

    UniformRng rng(seed); // one stream across all trials
    std::uint64_t survived = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        DisturbanceEngine engine(geom, RemapTable{}, DisturbanceProfile{});
        for (std::uint64_t close = 0; close < n_closes; ++close)
            para_on_close(aggressor, policy, rng, engine, close + 1);
        // a PARA hit moves the victim's last_refresh_time off zero
        if (engine.ledger().state(victim).last_refresh_time == 0)
            ++survived;
    }
    out.empirical = static_cast<double>(survived) / static_cast<double>(trials);
    out.abs_error = std::abs(out.empirical - out.analytic);
    return out;
}

} // namespace hammersim
