#pragma once

#include "hammersim/disturbance.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hammersim {

/// Event counts and the flip log for one simulation run.
struct SimReport {
    std::uint64_t activations = 0;
    std::uint64_t periodic_refreshes = 0;
    std::uint64_t para_refreshes = 0; ///< rows refreshed by PARA triggers
    std::vector<FlipEvent> flips;
    std::uint64_t flips_in_victim_pages = 0; ///< flips landing in victim-owned rows
    Ns simulated_time = 0;
    std::uint64_t trace_requests = 0;

    bool operator==(const SimReport&) const = default;
};

std::string report_to_json_text(const SimReport& report);
SimReport report_from_json_text(const std::string& text);

} // namespace hammersim
