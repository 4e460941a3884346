#pragma once

#include "hammersim/disturbance.hpp"
#include "hammersim/page_map.hpp"
#include "hammersim/policy.hpp"
#include "hammersim/report.hpp"
#include "hammersim/rng.hpp"
#include "hammersim/trace.hpp"

#include <cstdint>
#include <vector>

namespace hammersim {

/// t_refw divided by the active refresh multiplier (policy k when the policy
/// is increased_refresh, the timing baseline otherwise). Throws RangeError if
/// the multiplier collapses the window to zero.
Ns effective_refresh_window(const TimingParams& timing, const MitigationPolicy& policy);

/// Staggered distributed refresh: row r of every bank refreshes at
/// r * (window / rows) + n * window, so consecutive refreshes of any row are
/// exactly one window apart.
class RefreshSchedule {
  public:
    struct Event {
        Ns time;
        std::uint32_t row;
    };

    RefreshSchedule(Ns window, std::uint32_t rows_per_bank);

    Event peek() const;
    void pop() { ++index_; }

    Ns window() const { return window_; }

  private:
    Ns window_;
    Ns gap_; ///< spacing between consecutive rows' refresh slots
    std::uint32_t rows_;
    std::uint64_t index_ = 0;
};

/// PARA hook, called as a row closes. Draws exactly one uniform value per
/// close regardless of outcome; on a hit (u < p) refreshes every physical
/// neighbor of the closed row. Returns the number of rows refreshed.
std::uint32_t para_on_close(RowAddress closed, const MitigationPolicy& policy, UniformRng& rng,
                            DisturbanceEngine& engine, Ns time);

/// Runs a request trace under the closed-page policy: every request is one
/// ACT / access / PRE cycle and advances its bank's clock by t_rc. Periodic
/// refresh and the configured mitigation run inline. Deterministic given
/// identical inputs and seeds. `pages`, when given, scores flips landing in
/// victim-owned rows.
SimReport run_trace(const std::vector<Request>& trace, const Geometry& geom,
                    const RemapTable& remap, const TimingParams& timing,
                    const MitigationPolicy& policy, const DisturbanceProfile& profile,
                    const PageMap* pages = nullptr);

} // namespace hammersim
