#pragma once

#include "hammersim/attacks.hpp"
#include "hammersim/geometry.hpp"
#include "hammersim/page_map.hpp"
#include "hammersim/policy.hpp"
#include "hammersim/profile.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace hammersim {

struct OutputSpec {
    std::string format = "json"; ///< "json" or "csv"
    std::string path;            ///< empty = stdout
};

/// Parsed simulation config (schema version 1). Unknown fields are rejected;
/// relative file references resolve against the config file's directory.
struct Config {
    Geometry geometry;
    RemapTable remap;
    TimingParams timing;
    MitigationPolicy policy;
    std::string profile_path;
    DisturbanceProfile profile; ///< loaded eagerly from profile_path
    std::optional<std::string> trace_path;
    std::optional<AttackSpec> attack;
    std::optional<PageMap> page_map;
    OutputSpec output;
};

Config load_config(const std::string& path);
Config config_from_json_text(const std::string& text, const std::filesystem::path& base_dir);

} // namespace hammersim
