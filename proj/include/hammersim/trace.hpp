#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hammersim {

/// One memory request. Under the closed-page policy every request is a full
/// ACT / access / PRE cycle of its row.
struct Request {
    enum class Op { Read, Write };

    Op op = Op::Read;
    std::uint64_t addr = 0;
    std::vector<std::uint8_t> pattern; ///< writes only; fills the row cyclically

    bool operator==(const Request&) const = default;
};

/// Text format, one request per line:
///   R <hex-addr>
///   W <hex-addr> <hex-byte-pattern>
/// Lines starting with '#' and blank lines are skipped. Throws FormatError
/// with the line number on malformed entries.
std::vector<Request> parse_trace_text(const std::string& text);
std::vector<Request> load_trace(const std::string& path);

std::string trace_to_text(const std::vector<Request>& trace);
void save_trace(const std::vector<Request>& trace, const std::string& path);

} // namespace hammersim
