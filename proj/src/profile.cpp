#include "hammersim/profile.hpp"

#include "hammersim/errors.hpp"
#include "hammersim/rng.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <tuple>

namespace hammersim {

using nlohmann::json;

const char* to_string(FlipDirection d) {
    return d == FlipDirection::OneToZero ? "one_to_zero" : "zero_to_one";
}

const char* to_string(PatternGate g) {
    switch (g) {
    case PatternGate::Always: return "always";
    case PatternGate::RequiresStoredOne: return "requires_stored_one";
    default: return "requires_stored_zero";
    }
}

const char* to_string(CoupledSide s) {
    switch (s) {
    case CoupledSide::Either: return "either";
    case CoupledSide::LeftOnly: return "left_only";
    default: return "right_only";
    }
}

FlipDirection flip_direction_from_string(const std::string& s) {
    if (s == "one_to_zero") return FlipDirection::OneToZero;
    if (s == "zero_to_one") return FlipDirection::ZeroToOne;
    throw FormatError("unknown flip_direction: " + s);
}

PatternGate pattern_gate_from_string(const std::string& s) {
    if (s == "always") return PatternGate::Always;
    if (s == "requires_stored_one") return PatternGate::RequiresStoredOne;
    if (s == "requires_stored_zero") return PatternGate::RequiresStoredZero;
    throw FormatError("unknown pattern_gate: " + s);
}

CoupledSide coupled_side_from_string(const std::string& s) {
    if (s == "either") return CoupledSide::Either;
    if (s == "left_only") return CoupledSide::LeftOnly;
    if (s == "right_only") return CoupledSide::RightOnly;
    throw FormatError("unknown coupled_side: " + s);
}

void DisturbanceProfile::validate(const Geometry& geom) const {
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> seen;
    for (const auto& cell : cells) {
        if (cell.threshold < 1)
            throw FormatError("profile: threshold must be >= 1");
        if (cell.bank >= geom.banks)
            throw FormatError("profile: bank " + std::to_string(cell.bank) + " out of range");
        if (cell.victim_row >= geom.rows_per_bank)
            throw FormatError("profile: victim_row " + std::to_string(cell.victim_row) +
                              " out of range");
        if (cell.bit >= geom.row_size_bits)
            throw FormatError("profile: bit " + std::to_string(cell.bit) + " out of range");
        if (!seen.emplace(cell.bank, cell.victim_row, cell.bit).second)
            throw FormatError("profile: duplicate entry for (bank " + std::to_string(cell.bank) +
                              ", row " + std::to_string(cell.victim_row) + ", bit " +
                              std::to_string(cell.bit) + ")");
    }
}

static VulnerableCell cell_from_json(const json& j) {
    if (!j.is_object())
        throw FormatError("profile: entry is not an object");
    VulnerableCell cell;
    cell.bank = j.at("bank").get<std::uint32_t>();
    cell.victim_row = j.at("victim_row").get<std::uint32_t>();
    cell.bit = j.at("bit").get<std::uint64_t>();
    cell.threshold = j.at("threshold").get<std::uint64_t>();
    cell.flip_direction = flip_direction_from_string(j.at("flip_direction").get<std::string>());
    cell.pattern_gate = pattern_gate_from_string(j.at("pattern_gate").get<std::string>());
    cell.coupled_side = coupled_side_from_string(j.at("coupled_side").get<std::string>());
    return cell;
}

static json cell_to_json(const VulnerableCell& cell) {
    return json{{"bank", cell.bank},
                {"victim_row", cell.victim_row},
                {"bit", cell.bit},
                {"threshold", cell.threshold},
                {"flip_direction", to_string(cell.flip_direction)},
                {"pattern_gate", to_string(cell.pattern_gate)},
                {"coupled_side", to_string(cell.coupled_side)}};
}

DisturbanceProfile profile_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("profile: invalid JSON: ") + e.what());
    }
    if (!j.is_array())
        throw FormatError("profile: top-level JSON value must be an array of cells");
    DisturbanceProfile profile;
    try {
        for (const auto& entry : j)
            profile.cells.push_back(cell_from_json(entry));
    } catch (const json::exception& e) {
        throw FormatError(std::string("profile: ") + e.what());
    }
    return profile;
}

std::string profile_to_json_text(const DisturbanceProfile& profile) {
    json j = json::array();
    for (const auto& cell : profile.cells)
        j.push_back(cell_to_json(cell));
    return j.dump(2) + "\n";
}

DisturbanceProfile load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("profile: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return profile_from_json_text(text);
}

void save_profile(const DisturbanceProfile& profile, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw FormatError("profile: cannot write " + path);
    out << profile_to_json_text(profile);
}

DisturbanceProfile generate_profile(const ProfileGenParams& params, const Geometry& geom) {
    geom.validate();
    if (params.t_min < 1 || params.t_max < params.t_min)
        throw UsageError("gen-profile: need 1 <= t_min <= t_max");
    const std::uint64_t slots =
        static_cast<std::uint64_t>(geom.banks) * geom.rows_per_bank * geom.row_size_bits;
    if (params.cells > slots)
        throw UsageError("gen-profile: more cells requested than bits in the array");

    UniformRng rng(params.seed);
    DisturbanceProfile profile;
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> used;
    while (profile.cells.size() < params.cells) {
        VulnerableCell cell;
        cell.bank = static_cast<std::uint32_t>(rng.next_below(geom.banks));
        cell.victim_row = static_cast<std::uint32_t>(rng.next_below(geom.rows_per_bank));
        cell.bit = rng.next_below(geom.row_size_bits);
        if (!used.emplace(cell.bank, cell.victim_row, cell.bit).second)
            continue;
        cell.threshold = params.t_min + rng.next_below(params.t_max - params.t_min + 1);
        // coherent orientation: a true-cell discharges 1->0, an anti-cell 0->1
        if (rng.next_below(2) == 0) {
            cell.flip_direction = FlipDirection::OneToZero;
            cell.pattern_gate = PatternGate::RequiresStoredOne;
        } else {
            cell.flip_direction = FlipDirection::ZeroToOne;
            cell.pattern_gate = PatternGate::RequiresStoredZero;
        }
        const std::uint64_t side = rng.next_below(4);
        cell.coupled_side = side == 0   ? CoupledSide::LeftOnly
                            : side == 1 ? CoupledSide::RightOnly
                                        : CoupledSide::Either;
        profile.cells.push_back(cell);
    }
    return profile;
}

} // namespace hammersim
