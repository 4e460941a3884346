#pragma once

#include "hammersim/cell_array.hpp"
#include "hammersim/geometry.hpp"
#include "hammersim/profile.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace hammersim {

/// Per-row activation exposure since the row's last refresh, split by which
/// physical side the aggressor sat on.
class HammerLedger {
  public:
    struct RowState {
        std::uint64_t exposure_left = 0;  ///< ACTs of the physically-left neighbor
        std::uint64_t exposure_right = 0; ///< ACTs of the physically-right neighbor
        Ns last_refresh_time = 0;
    };

    HammerLedger(std::uint32_t banks, std::uint32_t rows_per_bank)
        : rows_per_bank_(rows_per_bank),
          states_(static_cast<std::size_t>(banks) * rows_per_bank) {}

    RowState& state(RowAddress addr) {
        return states_[static_cast<std::size_t>(addr.bank) * rows_per_bank_ + addr.row];
    }
    const RowState& state(RowAddress addr) const {
        return states_[static_cast<std::size_t>(addr.bank) * rows_per_bank_ + addr.row];
    }

    /// Refresh semantics: both exposures to zero, window restarts.
    void reset_row(RowAddress addr, Ns time) {
        auto& st = state(addr);
        st.exposure_left = 0;
        st.exposure_right = 0;
        st.last_refresh_time = time;
    }

  private:
    std::uint32_t rows_per_bank_;
    std::vector<RowState> states_;
};

struct FlipEvent {
    Ns time = 0;
    std::uint32_t bank = 0;
    std::uint32_t row = 0;
    std::uint64_t bit = 0;
    FlipDirection direction = FlipDirection::OneToZero;
    std::uint32_t aggressor_row = 0;

    bool operator==(const FlipEvent&) const = default;
};

/// Read-disturb fault injection. Every activation charges the exposure of the
/// aggressor's physical neighbors; a vulnerable cell whose gating exposure
/// reaches its threshold inside the victim's refresh window, and whose pattern
/// gate matches the stored bit, is inverted in place. Fully deterministic.
class DisturbanceEngine {
  public:
    DisturbanceEngine(const Geometry& geom, const RemapTable& remap, DisturbanceProfile profile);

    /// Aggressor row opened at `time`. Returns the flips this activation
    /// caused, victim rows only; the aggressor's own bits are never touched.
    /// Throws UsageError if `time` goes backwards.
    std::vector<FlipEvent> on_activate(RowAddress agg, Ns time, CellArray& cells);

    /// Victim refreshed: exposure counters and the once-per-window flip marks
    /// are cleared. Previously flipped data stays corrupted.
    void on_refresh(RowAddress victim, Ns time);

    const HammerLedger& ledger() const { return ledger_; }
    const DisturbanceProfile& profile() const { return profile_; }
    const Geometry& geometry() const { return geom_; }
    const RemapTable& remap() const { return remap_; }

  private:
    void charge_and_flip(RowAddress victim, bool aggressor_on_left, std::uint32_t aggressor_row,
                         Ns time, CellArray& cells, std::vector<FlipEvent>& out);

    Geometry geom_;
    RemapTable remap_;
    DisturbanceProfile profile_;
    HammerLedger ledger_;
    std::vector<char> fired_; ///< per profile entry: flipped in the current window
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_by_row_;
    Ns last_activate_time_ = 0;
    bool saw_activate_ = false;
};

} // namespace hammersim
