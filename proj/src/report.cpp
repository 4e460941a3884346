#include "hammersim/report.hpp"

#include "hammersim/errors.hpp"

#include <json.hpp>

namespace hammersim {

using nlohmann::json;

static json flip_to_json(const FlipEvent& ev) {
    return json{{"time", ev.time},
                {"bank", ev.bank},
                {"row", ev.row},
                {"bit", ev.bit},
                {"direction", to_string(ev.direction)},
                {"aggressor_row", ev.aggressor_row}};
}

static FlipEvent flip_from_json(const json& j) {
    FlipEvent ev;
    ev.time = j.at("time").get<Ns>();
    ev.bank = j.at("bank").get<std::uint32_t>();
    ev.row = j.at("row").get<std::uint32_t>();
    ev.bit = j.at("bit").get<std::uint64_t>();
    ev.direction = flip_direction_from_string(j.at("direction").get<std::string>());
    ev.aggressor_row = j.at("aggressor_row").get<std::uint32_t>();
    return ev;
}

std::string report_to_json_text(const SimReport& report) {
    json flips = json::array();
    for (const auto& ev : report.flips)
        flips.push_back(flip_to_json(ev));
    json j{{"activations", report.activations},
           {"periodic_refreshes", report.periodic_refreshes},
           {"para_refreshes", report.para_refreshes},
           {"flips", std::move(flips)},
           {"flips_in_victim_pages", report.flips_in_victim_pages},
           {"simulated_time", report.simulated_time},
           {"trace_requests", report.trace_requests}};
    return j.dump(2) + "\n";
}

SimReport report_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("report: invalid JSON: ") + e.what());
    }
    SimReport report;
    try {
        report.activations = j.at("activations").get<std::uint64_t>();
        report.periodic_refreshes = j.at("periodic_refreshes").get<std::uint64_t>();
        report.para_refreshes = j.at("para_refreshes").get<std::uint64_t>();
        for (const auto& ev : j.at("flips"))
            report.flips.push_back(flip_from_json(ev));
        report.flips_in_victim_pages = j.at("flips_in_victim_pages").get<std::uint64_t>();
        report.simulated_time = j.at("simulated_time").get<Ns>();
        report.trace_requests = j.at("trace_requests").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("report: ") + e.what());
    }
    return report;
}

} // namespace hammersim
