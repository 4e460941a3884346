#include "hammersim/policy.hpp"

#include "hammersim/errors.hpp"

namespace hammersim {

void TimingParams::validate() const {
    if (t_rc == 0)
        throw RangeError("timing: t_rc must be > 0");
    if (t_refw < t_rc)
        throw RangeError("timing: t_refw must be >= t_rc");
    if (refresh_multiplier_k < 1)
        throw RangeError("timing: refresh_multiplier_k must be >= 1");
}

MitigationPolicy MitigationPolicy::increased_refresh(std::uint32_t k) {
    MitigationPolicy policy;
    policy.kind = MitigationKind::IncreasedRefresh;
    policy.k = k;
    return policy;
}

MitigationPolicy MitigationPolicy::para(double p, std::uint64_t seed) {
    MitigationPolicy policy;
    policy.kind = MitigationKind::Para;
    policy.p = p;
    policy.rng_seed = seed;
    return policy;
}

void MitigationPolicy::validate() const {
    if (kind == MitigationKind::IncreasedRefresh && k < 1)
        throw RangeError("policy: increased_refresh requires k >= 1");
    if (kind == MitigationKind::Para && !(p >= 0.0 && p <= 1.0))
        throw RangeError("policy: para requires p in [0,1]");
}

const char* to_string(MitigationKind kind) {
    switch (kind) {
    case MitigationKind::None: return "none";
    case MitigationKind::IncreasedRefresh: return "increased_refresh";
    default: return "para";
    }
}

} // namespace hammersim
