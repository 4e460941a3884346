#pragma once

#include "hammersim/geometry.hpp"
#include "hammersim/page_map.hpp"
#include "hammersim/report.hpp"
#include "hammersim/trace.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hammersim {

enum class AttackKind { SingleSided, DoubleSided, RandomBaseline };

const char* to_string(AttackKind kind);
AttackKind attack_kind_from_string(const std::string& s);

/// Synthetic attacker pattern. `writes` switches the emitted requests from
/// reads to writes (both activate the target row).
struct AttackSpec {
    AttackKind kind = AttackKind::DoubleSided;
    std::uint32_t target_victim_row = 1;
    std::uint32_t bank = 0;
    std::uint64_t iterations = 0;
    std::uint64_t seed = 0; ///< random_baseline only
    bool writes = false;
};

/// Emits the attack as a controller trace. Every emitted address stays inside
/// attacker-owned rows; the preconditions on ownership are enforced and
/// violations raise PolicyError naming the offending row.
///
///   single_sided:    iterations x (aggressor, conflict) read pairs, where
///                    aggressor = victim-1 and conflict is the lowest other
///                    attacker-owned row in the bank not adjacent to the victim
///   double_sided:    iterations x (victim-1, victim+1) read pairs
///   random_baseline: iterations reads at seeded-uniform attacker-owned rows
std::vector<Request> generate_trace(const AttackSpec& spec, const Geometry& geom,
                                    const PageMap& pages);

/// Flip counts keyed by the owner of the victim row. A breach is any flip
/// outside attacker-owned rows.
struct BreachReport {
    std::uint64_t total_flips = 0;
    std::array<std::uint64_t, 4> flips_by_owner{}; ///< indexed by Owner
    std::uint64_t breaches = 0;

    std::uint64_t flips_for(Owner owner) const {
        return flips_by_owner[static_cast<std::size_t>(owner)];
    }
};

BreachReport isolation_breach_report(const SimReport& report, const PageMap& pages);

std::string breach_report_to_json_text(const BreachReport& breach);

} // namespace hammersim
