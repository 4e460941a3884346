#include "hammersim/config.hpp"

#include "hammersim/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <string>

namespace hammersim {

using nlohmann::json;

namespace {

std::string join_path(const std::string& prefix, const std::string& field) {
    return prefix.empty() ? field : prefix + "." + field;
}

void reject_unknown_fields(const json& j, const std::string& prefix,
                           const std::set<std::string>& allowed) {
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key))
            throw ConfigError("config: unknown field '" + join_path(prefix, key) + "'");
}

const json& require_field(const json& j, const std::string& prefix, const std::string& field) {
    auto it = j.find(field);
    if (it == j.end())
        throw ConfigError("config: missing field '" + join_path(prefix, field) + "'");
    return *it;
}

template <typename T>
T get_number(const json& j, const std::string& prefix, const std::string& field) {
    const json& v = require_field(j, prefix, field);
    if (!v.is_number())
        throw ConfigError("config: field '" + join_path(prefix, field) + "' must be a number");
    return v.get<T>();
}

std::string get_string(const json& j, const std::string& prefix, const std::string& field) {
    const json& v = require_field(j, prefix, field);
    if (!v.is_string())
        throw ConfigError("config: field '" + join_path(prefix, field) + "' must be a string");
    return v.get<std::string>();
}

Geometry parse_geometry(const json& j) {
    if (!j.is_object())
        throw ConfigError("config: field 'geometry' must be an object");
    reject_unknown_fields(j, "geometry", {"banks", "rows_per_bank", "row_size_bits", "page_size_bits"});
    Geometry geom;
    geom.banks = get_number<std::uint32_t>(j, "geometry", "banks");
    geom.rows_per_bank = get_number<std::uint32_t>(j, "geometry", "rows_per_bank");
    geom.row_size_bits = get_number<std::uint64_t>(j, "geometry", "row_size_bits");
    geom.page_size_bits =
        j.contains("page_size_bits") ? get_number<std::uint64_t>(j, "geometry", "page_size_bits")
                                     : geom.row_size_bits;
    try {
        geom.validate();
    } catch (const RangeError& e) {
        throw ConfigError("config: geometry: " + std::string(e.what()));
    }
    return geom;
}

TimingParams parse_timing(const json& j) {
    if (!j.is_object())
        throw ConfigError("config: field 'timing' must be an object");
    reject_unknown_fields(j, "timing", {"t_rc_ns", "t_refw_ns", "refresh_multiplier_k"});
    TimingParams timing;
    if (j.contains("t_rc_ns"))
        timing.t_rc = get_number<Ns>(j, "timing", "t_rc_ns");
    if (j.contains("t_refw_ns"))
        timing.t_refw = get_number<Ns>(j, "timing", "t_refw_ns");
    if (j.contains("refresh_multiplier_k"))
        timing.refresh_multiplier_k = get_number<std::uint32_t>(j, "timing", "refresh_multiplier_k");
    try {
        timing.validate();
    } catch (const RangeError& e) {
        throw ConfigError("config: timing: " + std::string(e.what()));
    }
    return timing;
}

MitigationPolicy parse_policy(const json& j) {
    if (!j.is_object())
        throw ConfigError("config: field 'policy' must be an object");
    reject_unknown_fields(j, "policy", {"kind", "k", "p", "rng_seed"});
    const std::string kind = get_string(j, "policy", "kind");
    if (kind == "none") {
        reject_unknown_fields(j, "policy", {"kind"});
        return MitigationPolicy::none();
    }
    if (kind == "increased_refresh") {
        reject_unknown_fields(j, "policy", {"kind", "k"});
        const auto k = get_number<std::uint32_t>(j, "policy", "k");
        if (k < 1)
            throw ConfigError("config: policy.k must be >= 1");
        return MitigationPolicy::increased_refresh(k);
    }
    if (kind == "para") {
        reject_unknown_fields(j, "policy", {"kind", "p", "rng_seed"});
        const double p = get_number<double>(j, "policy", "p");
        if (!(p >= 0.0 && p <= 1.0))
            throw ConfigError("config: policy.p must be in [0,1]");
        const auto seed = get_number<std::uint64_t>(j, "policy", "rng_seed");
        return MitigationPolicy::para(p, seed);
    }
    throw ConfigError("config: policy.kind must be one of none, increased_refresh, para");
}

AttackSpec parse_attack(const json& j, const Geometry& geom) {
    if (!j.is_object())
        throw ConfigError("config: field 'attack' must be an object");
    reject_unknown_fields(j, "attack",
                          {"kind", "target_victim_row", "bank", "iterations", "seed", "writes"});
    AttackSpec spec;
    try {
        spec.kind = attack_kind_from_string(get_string(j, "attack", "kind"));
    } catch (const FormatError& e) {
        throw ConfigError("config: attack.kind: " + std::string(e.what()));
    }
    if (j.contains("target_victim_row"))
        spec.target_victim_row = get_number<std::uint32_t>(j, "attack", "target_victim_row");
    else if (spec.kind != AttackKind::RandomBaseline)
        throw ConfigError("config: missing field 'attack.target_victim_row'");
    if (j.contains("bank"))
        spec.bank = get_number<std::uint32_t>(j, "attack", "bank");
    spec.iterations = get_number<std::uint64_t>(j, "attack", "iterations");
    if (j.contains("seed"))
        spec.seed = get_number<std::uint64_t>(j, "attack", "seed");
    else if (spec.kind == AttackKind::RandomBaseline)
        throw ConfigError("config: missing field 'attack.seed' (random_baseline)");
    if (j.contains("writes")) {
        const json& w = j.at("writes");
        if (!w.is_boolean())
            throw ConfigError("config: field 'attack.writes' must be a boolean");
        spec.writes = w.get<bool>();
    }
    if (spec.bank >= geom.banks)
        throw ConfigError("config: attack.bank out of range");
    return spec;
}

PageMap parse_page_map(const json& j, const Geometry& geom) {
    if (!j.is_array())
        throw ConfigError("config: field 'page_map' must be an array of owner ranges");
    PageMap pages;
    std::size_t index = 0;
    for (const auto& entry : j) {
        const std::string prefix = "page_map[" + std::to_string(index) + "]";
        if (!entry.is_object())
            throw ConfigError("config: " + prefix + " must be an object");
        reject_unknown_fields(entry, prefix, {"owner", "bank", "rows"});
        Owner owner;
        try {
            owner = owner_from_string(get_string(entry, prefix, "owner"));
        } catch (const FormatError& e) {
            throw ConfigError("config: " + prefix + ".owner: " + std::string(e.what()));
        }
        const auto bank = get_number<std::uint32_t>(entry, prefix, "bank");
        if (bank >= geom.banks)
            throw ConfigError("config: " + prefix + ".bank out of range");
        const json& rows = require_field(entry, prefix, "rows");
        if (!rows.is_array() || rows.size() != 2 || !rows[0].is_number() || !rows[1].is_number())
            throw ConfigError("config: " + prefix + ".rows must be [first, last]");
        const auto lo = rows[0].get<std::uint32_t>();
        const auto hi = rows[1].get<std::uint32_t>();
        if (hi < lo || hi >= geom.rows_per_bank)
            throw ConfigError("config: " + prefix + ".rows out of range");
        pages.set_owner_range(bank, lo, hi, owner);
        ++index;
    }
    return pages;
}

RemapTable parse_remap(const json& j, const Geometry& geom) {
    if (!j.is_array())
        throw ConfigError("config: field 'remap' must be an array (logical -> physical)");
    std::vector<std::uint32_t> table;
    for (const auto& v : j) {
        if (!v.is_number())
            throw ConfigError("config: remap entries must be numbers");
        table.push_back(v.get<std::uint32_t>());
    }
    RemapTable remap(std::move(table));
    try {
        remap.validate(geom.rows_per_bank);
    } catch (const RangeError& e) {
        throw ConfigError("config: remap: " + std::string(e.what()));
    }
    return remap;
}

OutputSpec parse_output(const json& j) {
    if (!j.is_object())
        throw ConfigError("config: field 'output' must be an object");
    reject_unknown_fields(j, "output", {"format", "path"});
    OutputSpec out;
    if (j.contains("format")) {
        out.format = get_string(j, "output", "format");
        if (out.format != "json" && out.format != "csv")
            throw ConfigError("config: output.format must be json or csv");
    }
    if (j.contains("path"))
        out.path = get_string(j, "output", "path");
    return out;
}

std::string resolve(const std::filesystem::path& base_dir, const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute() || base_dir.empty())
        return p.string();
    return (base_dir / p).string();
}

} // namespace

Config config_from_json_text(const std::string& text, const std::filesystem::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config: top-level JSON value must be an object");
    reject_unknown_fields(j, "",
                          {"schema", "geometry", "remap", "timing", "policy", "profile", "trace",
                           "attack", "page_map", "output"});

    const auto schema = get_number<int>(j, "", "schema");
    if (schema != 1)
        throw ConfigError("config: unsupported schema version " + std::to_string(schema));

    Config config;
    config.geometry = parse_geometry(require_field(j, "", "geometry"));
    if (j.contains("remap"))
        config.remap = parse_remap(j.at("remap"), config.geometry);
    if (j.contains("timing"))
        config.timing = parse_timing(j.at("timing"));
    config.policy = parse_policy(require_field(j, "", "policy"));

    config.profile_path = resolve(base_dir, get_string(j, "", "profile"));
    if (!std::filesystem::exists(config.profile_path))
        throw ConfigError("config: profile file does not exist: " + config.profile_path);
    try {
        config.profile = load_profile(config.profile_path);
        config.profile.validate(config.geometry);
    } catch (const FormatError& e) {
        throw ConfigError("config: profile: " + std::string(e.what()));
    }

    const bool has_trace = j.contains("trace");
    const bool has_attack = j.contains("attack");
    if (has_trace == has_attack)
        throw ConfigError("config: exactly one of 'trace' and 'attack' must be present");
    if (has_trace) {
        config.trace_path = resolve(base_dir, get_string(j, "", "trace"));
        if (!std::filesystem::exists(*config.trace_path))
            throw ConfigError("config: trace file does not exist: " + *config.trace_path);
    } else {
        config.attack = parse_attack(j.at("attack"), config.geometry);
        if (!j.contains("page_map"))
            throw ConfigError("config: 'attack' requires 'page_map' (ownership preconditions)");
    }

    if (j.contains("page_map"))
        config.page_map = parse_page_map(j.at("page_map"), config.geometry);
    if (j.contains("output"))
        config.output = parse_output(j.at("output"));
    return config;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return config_from_json_text(text, std::filesystem::path(path).parent_path());
}

} // namespace hammersim
