#pragma once

#include "hammersim/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hammersim {

enum class FlipDirection { OneToZero, ZeroToOne };

/// Data-pattern condition evaluated against the victim's stored bit at
/// flip time.
enum class PatternGate { Always, RequiresStoredOne, RequiresStoredZero };

/// Which neighbor's activations count toward the threshold. `Either` sums
/// both sides.
enum class CoupledSide { Either, LeftOnly, RightOnly };

const char* to_string(FlipDirection d);
const char* to_string(PatternGate g);
const char* to_string(CoupledSide s);
FlipDirection flip_direction_from_string(const std::string& s);
PatternGate pattern_gate_from_string(const std::string& s);
CoupledSide coupled_side_from_string(const std::string& s);

/// One weak cell: flips once its gating exposure reaches `threshold`
/// adjacent activations within the victim row's refresh window.
struct VulnerableCell {
    std::uint32_t bank = 0;
    std::uint32_t victim_row = 0;
    std::uint64_t bit = 0;
    std::uint64_t threshold = 1;
    FlipDirection flip_direction = FlipDirection::OneToZero;
    PatternGate pattern_gate = PatternGate::Always;
    CoupledSide coupled_side = CoupledSide::Either;
};

/// The chip personality: the set of cells that can be disturbed.
struct DisturbanceProfile {
    std::vector<VulnerableCell> cells;

    /// Checks thresholds, index bounds against the geometry, and rejects
    /// duplicate (bank, victim_row, bit) entries.
    void validate(const Geometry& geom) const;
};

DisturbanceProfile load_profile(const std::string& path);
void save_profile(const DisturbanceProfile& profile, const std::string& path);

DisturbanceProfile profile_from_json_text(const std::string& text);
std::string profile_to_json_text(const DisturbanceProfile& profile);

struct ProfileGenParams {
    std::uint64_t cells = 16;
    std::uint64_t t_min = 32;  ///< threshold range, uniform
    std::uint64_t t_max = 128;
    std::uint64_t seed = 0;
};

/// Randomized fleet generator: distinct (bank,row,bit) victims with
/// thresholds uniform over [t_min, t_max]. Direction and gate are drawn
/// as a coherent pair (a cell that flips 1->0 requires a stored 1).
DisturbanceProfile generate_profile(const ProfileGenParams& params, const Geometry& geom);

} // namespace hammersim
