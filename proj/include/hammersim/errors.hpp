#pragma once

#include <stdexcept>
#include <string>

namespace hammersim {

/// Address or index outside the configured geometry.
struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Malformed input: trace lines, profile entries, data lengths.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// API misuse: non-monotonic time, unknown sweep parameter, zero trials.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Page-ownership violation in attack generation.
struct PolicyError : std::runtime_error {
    explicit PolicyError(const std::string& what) : std::runtime_error(what) {}
};

/// Mathematically unanswerable request (e.g. protecting a zero-threshold cell).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Config file schema violation; message carries the offending field path.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hammersim
