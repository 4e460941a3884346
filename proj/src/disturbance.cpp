#include "hammersim/disturbance.hpp"

#include "hammersim/errors.hpp"

#include <string>

namespace hammersim {

DisturbanceEngine::DisturbanceEngine(const Geometry& geom, const RemapTable& remap,
                                     DisturbanceProfile profile)
    : geom_(geom), remap_(remap), profile_(std::move(profile)),
      ledger_(geom.banks, geom.rows_per_bank), fired_(profile_.cells.size(), 0) {
    geom_.validate();
    remap_.validate(geom_.rows_per_bank);
    profile_.validate(geom_);
    for (std::uint32_t i = 0; i < profile_.cells.size(); ++i) {
        const auto& cell = profile_.cells[i];
        const std::uint64_t key =
            static_cast<std::uint64_t>(cell.bank) * geom_.rows_per_bank + cell.victim_row;
        cells_by_row_[key].push_back(i);
    }
}

std::vector<FlipEvent> DisturbanceEngine::on_activate(RowAddress agg, Ns time, CellArray& cells) {
    if (agg.bank >= geom_.banks || agg.row >= geom_.rows_per_bank)
        throw RangeError("on_activate: aggressor address out of range");
    if (saw_activate_ && time < last_activate_time_)
        throw UsageError("on_activate: time went backwards (" + std::to_string(time) + " < " +
                         std::to_string(last_activate_time_) + ")");
    last_activate_time_ = time;
    saw_activate_ = true;

    std::vector<FlipEvent> flips;
    const std::uint32_t agg_phys = remap_.to_physical(agg.row);
    if (agg_phys > 0) {
        // victim sits physically left of the aggressor
        const std::uint32_t victim = remap_.to_logical(agg_phys - 1);
        charge_and_flip({agg.bank, victim}, /*aggressor_on_left=*/false, agg.row, time, cells,
                        flips);
    }
    if (agg_phys + 1 < geom_.rows_per_bank) {
        const std::uint32_t victim = remap_.to_logical(agg_phys + 1);
        charge_and_flip({agg.bank, victim}, /*aggressor_on_left=*/true, agg.row, time, cells,
                        flips);
    }
    return flips;
}

void DisturbanceEngine::charge_and_flip(RowAddress victim, bool aggressor_on_left,
                                        std::uint32_t aggressor_row, Ns time, CellArray& cells,
                                        std::vector<FlipEvent>& out) {
    auto& st = ledger_.state(victim);
    if (aggressor_on_left)
        ++st.exposure_left;
    else
        ++st.exposure_right;

    const std::uint64_t key =
        static_cast<std::uint64_t>(victim.bank) * geom_.rows_per_bank + victim.row;
    auto it = cells_by_row_.find(key);
    if (it == cells_by_row_.end())
        return;

    for (std::uint32_t idx : it->second) {
        if (fired_[idx])
            continue;
        const VulnerableCell& cell = profile_.cells[idx];
        std::uint64_t exposure = 0;
        switch (cell.coupled_side) {
        case CoupledSide::LeftOnly: exposure = st.exposure_left; break;
        case CoupledSide::RightOnly: exposure = st.exposure_right; break;
        case CoupledSide::Either: exposure = st.exposure_left + st.exposure_right; break;
        }
        if (exposure < cell.threshold)
            continue;
        const bool stored = cells.get_bit(victim, cell.bit);
        if (cell.pattern_gate == PatternGate::RequiresStoredOne && !stored)
            continue;
        if (cell.pattern_gate == PatternGate::RequiresStoredZero && stored)
            continue;
        const bool now = cells.flip_bit(victim, cell.bit);
        fired_[idx] = 1;
        FlipEvent ev;
        ev.time = time;
        ev.bank = victim.bank;
        ev.row = victim.row;
        ev.bit = cell.bit;
        ev.direction = now ? FlipDirection::ZeroToOne : FlipDirection::OneToZero;
        ev.aggressor_row = aggressor_row;
        out.push_back(ev);
    }
}

void DisturbanceEngine::on_refresh(RowAddress victim, Ns time) {
    if (victim.bank >= geom_.banks || victim.row >= geom_.rows_per_bank)
        throw RangeError("on_refresh: victim address out of range");
    ledger_.reset_row(victim, time);
    const std::uint64_t key =
        static_cast<std::uint64_t>(victim.bank) * geom_.rows_per_bank + victim.row;
    auto it = cells_by_row_.find(key);
    if (it != cells_by_row_.end())
        for (std::uint32_t idx : it->second)
            fired_[idx] = 0;
}

} // namespace hammersim
