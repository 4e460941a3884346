#include "hammersim/attacks.hpp"

#include "hammersim/errors.hpp"
#include "hammersim/rng.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hammersim {

const char* to_string(AttackKind kind) {
    switch (kind) {
    case AttackKind::SingleSided: return "single_sided";
    case AttackKind::DoubleSided: return "double_sided";
    default: return "random_baseline";
    }
}

AttackKind attack_kind_from_string(const std::string& s) {
    if (s == "single_sided") return AttackKind::SingleSided;
    if (s == "double_sided") return AttackKind::DoubleSided;
    if (s == "random_baseline") return AttackKind::RandomBaseline;
    throw FormatError("unknown attack kind: " + s);
}

namespace {

void require_attacker_owned(const PageMap& pages, std::uint32_t bank, std::uint32_t row,
                            const char* role) {
    if (pages.owner({bank, row}) != Owner::Attacker)
        throw PolicyError(std::string("attack: ") + role + " row " + std::to_string(row) +
                          " in bank " + std::to_string(bank) + " is not attacker-owned");
}

Request row_request(const AttackSpec& spec, std::uint32_t row, const Geometry& geom) {
    Request req;
    req.addr = encode_address({spec.bank, row}, 0, geom);
    if (spec.writes) {
        req.op = Request::Op::Write;
        req.pattern = {0x00};
    }
    return req;
}

} // namespace

std::vector<Request> generate_trace(const AttackSpec& spec, const Geometry& geom,
                                    const PageMap& pages) {
    geom.validate();
    if (spec.bank >= geom.banks)
        throw RangeError("attack: bank out of range");
    if (spec.kind != AttackKind::RandomBaseline) {
        if (spec.target_victim_row >= geom.rows_per_bank)
            throw RangeError("attack: target_victim_row out of range");
        if (pages.owner({spec.bank, spec.target_victim_row}) == Owner::Attacker)
            throw PolicyError("attack: target victim row " +
                              std::to_string(spec.target_victim_row) + " in bank " +
                              std::to_string(spec.bank) + " is attacker-owned");
    }

    std::vector<Request> trace;
    switch (spec.kind) {
    case AttackKind::DoubleSided: {
        if (spec.target_victim_row < 1 || spec.target_victim_row > geom.rows_per_bank - 2)
            throw RangeError("attack: double_sided victim must have rows on both sides");
        const std::uint32_t below = spec.target_victim_row - 1;
        const std::uint32_t above = spec.target_victim_row + 1;
        require_attacker_owned(pages, spec.bank, below, "aggressor");
        require_attacker_owned(pages, spec.bank, above, "aggressor");
        trace.reserve(spec.iterations * 2);
        for (std::uint64_t i = 0; i < spec.iterations; ++i) {
            trace.push_back(row_request(spec, below, geom));
            trace.push_back(row_request(spec, above, geom));
        }
        break;
    }
    case AttackKind::SingleSided: {
        if (spec.target_victim_row < 1)
            throw RangeError("attack: single_sided victim needs a row below it");
        const std::uint32_t aggressor = spec.target_victim_row - 1;
        require_attacker_owned(pages, spec.bank, aggressor, "aggressor");
        // conflict row: lowest attacker-owned row that is neither the
        // aggressor nor adjacent to the victim, so alternation stays
        // single-sided while still forcing re-activation
        std::optional<std::uint32_t> conflict;
        for (std::uint32_t row = 0; row < geom.rows_per_bank; ++row) {
            if (row == aggressor || row + 1 == spec.target_victim_row ||
                row == spec.target_victim_row + 1 || row == spec.target_victim_row)
                continue;
            if (pages.owner({spec.bank, row}) == Owner::Attacker) {
                conflict = row;
                break;
            }
        }
        if (!conflict)
            throw PolicyError("attack: no attacker-owned conflict row available in bank " +
                              std::to_string(spec.bank));
        trace.reserve(spec.iterations * 2);
        for (std::uint64_t i = 0; i < spec.iterations; ++i) {
            trace.push_back(row_request(spec, aggressor, geom));
            trace.push_back(row_request(spec, *conflict, geom));
        }
        break;
    }
    case AttackKind::RandomBaseline: {
        std::vector<std::uint32_t> owned;
        for (std::uint32_t row = 0; row < geom.rows_per_bank; ++row)
            if (pages.owner({spec.bank, row}) == Owner::Attacker)
                owned.push_back(row);
        if (owned.empty())
            throw PolicyError("attack: no attacker-owned rows in bank " +
                              std::to_string(spec.bank));
        UniformRng rng(spec.seed);
        trace.reserve(spec.iterations);
        for (std::uint64_t i = 0; i < spec.iterations; ++i)
            trace.push_back(row_request(spec, owned[rng.next_below(owned.size())], geom));
        break;
    }
    }
    return trace;
}

BreachReport isolation_breach_report(const SimReport& report, const PageMap& pages) {
    BreachReport out;
    for (const FlipEvent& ev : report.flips) {
        ++out.total_flips;
        const Owner owner = pages.owner({ev.bank, ev.row});
        ++out.flips_by_owner[static_cast<std::size_t>(owner)];
        if (owner != Owner::Attacker)
            ++out.breaches;
    }
    return out;
}

std::string breach_report_to_json_text(const BreachReport& breach) {
    nlohmann::json j{{"total_flips", breach.total_flips},
                     {"breaches", breach.breaches},
                     {"flips_by_owner",
                      {{"attacker", breach.flips_for(Owner::Attacker)},
                       {"victim", breach.flips_for(Owner::Victim)},
                       {"kernel", breach.flips_for(Owner::Kernel)},
                       {"free", breach.flips_for(Owner::Free)}}}};
    return j.dump(2) + "\n";
}

} // namespace hammersim
