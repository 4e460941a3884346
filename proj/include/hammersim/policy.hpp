#pragma once

#include "hammersim/geometry.hpp"

#include <cstdint>

namespace hammersim {

/// Command timing. t_rc bounds the hammer rate; t_refw bounds the attacker's
/// window. refresh_multiplier_k is the baseline multiplier applied when the
/// mitigation policy does not set its own.
struct TimingParams {
    Ns t_rc = 50;              ///< min interval between ACTs of the same bank
    Ns t_refw = 64'000'000;    ///< every row refreshed once per window
    std::uint32_t refresh_multiplier_k = 1;

    void validate() const;
};

enum class MitigationKind { None, IncreasedRefresh, Para };

/// none | increased_refresh(k) | para(p, seed)
struct MitigationPolicy {
    MitigationKind kind = MitigationKind::None;
    std::uint32_t k = 1;        ///< increased_refresh: effective window = t_refw / k
    double p = 0.0;             ///< para: trigger probability per row close
    std::uint64_t rng_seed = 0; ///< para draws come from this seeded stream

    static MitigationPolicy none() { return {}; }
    static MitigationPolicy increased_refresh(std::uint32_t k);
    static MitigationPolicy para(double p, std::uint64_t seed);

    void validate() const;
};

const char* to_string(MitigationKind kind);

} // namespace hammersim
