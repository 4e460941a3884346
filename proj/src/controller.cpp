#include "hammersim/controller.hpp"

#include "hammersim/errors.hpp"

#include <algorithm>

namespace hammersim {

Ns effective_refresh_window(const TimingParams& timing, const MitigationPolicy& policy) {
    timing.validate();
    policy.validate();
    const std::uint32_t k =
        policy.kind == MitigationKind::IncreasedRefresh ? policy.k : timing.refresh_multiplier_k;
    const Ns window = timing.t_refw / k;
    if (window == 0)
        throw RangeError("refresh multiplier " + std::to_string(k) +
                         " collapses the refresh window to zero");
    return window;
}

RefreshSchedule::RefreshSchedule(Ns window, std::uint32_t rows_per_bank)
    : window_(window), gap_(window / rows_per_bank), rows_(rows_per_bank) {
    if (window == 0)
        throw RangeError("refresh schedule: zero window");
    if (rows_per_bank == 0)
        throw RangeError("refresh schedule: zero rows");
}

RefreshSchedule::Event RefreshSchedule::peek() const {
    const std::uint64_t cycle = index_ / rows_;
    const std::uint32_t slot = static_cast<std::uint32_t>(index_ % rows_);
    return {cycle * window_ + slot * gap_, slot};
}

std::uint32_t para_on_close(RowAddress closed, const MitigationPolicy& policy, UniformRng& rng,
                            DisturbanceEngine& engine, Ns time) {
    if (policy.kind != MitigationKind::Para)
        throw UsageError("para_on_close: policy is not para");
    const double u = rng.next_unit(); // one draw per close, hit or miss
    if (u >= policy.p)
        return 0;
    std::uint32_t refreshed = 0;
    for (std::uint32_t victim : physical_neighbors(closed.row, engine.remap(),
                                                   engine.geometry().rows_per_bank)) {
        engine.on_refresh({closed.bank, victim}, time);
        ++refreshed;
    }
    return refreshed;
}

SimReport run_trace(const std::vector<Request>& trace, const Geometry& geom,
                    const RemapTable& remap, const TimingParams& timing,
                    const MitigationPolicy& policy, const DisturbanceProfile& profile,
                    const PageMap* pages) {
    geom.validate();
    remap.validate(geom.rows_per_bank);
    timing.validate();
    policy.validate();

    SimReport report;
    report.trace_requests = trace.size();
    if (trace.empty())
        return report;

    CellArray cells(geom);
    DisturbanceEngine engine(geom, remap, profile);
    const Ns window = effective_refresh_window(timing, policy);
    RefreshSchedule schedule(window, geom.rows_per_bank);
    UniformRng para_rng(policy.rng_seed);
    std::vector<Ns> bank_next(geom.banks, 0);
    Ns now = 0;

    auto drain_refreshes = [&](Ns up_to) {
        for (auto ev = schedule.peek(); ev.time <= up_to; ev = schedule.peek()) {
            for (std::uint32_t bank = 0; bank < geom.banks; ++bank) {
                engine.on_refresh({bank, ev.row}, ev.time);
                ++report.periodic_refreshes;
            }
            schedule.pop();
        }
    };

    for (const Request& req : trace) {
        const DecodedAddress decoded = map_address(req.addr, geom);
        const RowAddress target = decoded.row;
        const Ns act_time = std::max(now, bank_next[target.bank]);
        drain_refreshes(act_time);

        // ACT: the hammering event
        auto flips = engine.on_activate(target, act_time, cells);
        for (auto& ev : flips) {
            if (pages && pages->owner({ev.bank, ev.row}) == Owner::Victim)
                ++report.flips_in_victim_pages;
            report.flips.push_back(ev);
        }
        ++report.activations;

        // access
        if (req.op == Request::Op::Write)
            cells.fill_row(target, req.pattern);

        // PRE closes the row; PARA refreshes are time-free
        if (policy.kind == MitigationKind::Para)
            report.para_refreshes += para_on_close(target, policy, para_rng, engine, act_time);

        bank_next[target.bank] = act_time + timing.t_rc;
        now = act_time;
    }

    report.simulated_time = *std::max_element(bank_next.begin(), bank_next.end());
    drain_refreshes(report.simulated_time);
    return report;
}

} // namespace hammersim
