#include "hammersim/trace.hpp"

#include "hammersim/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hammersim {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::uint64_t parse_hex_addr(const std::string& token, std::size_t line_no) {
    std::size_t start = 0;
    if (token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X'))
        start = 2;
    if (start == token.size())
        throw FormatError("trace line " + std::to_string(line_no) + ": empty address");
    std::uint64_t value = 0;
    for (std::size_t i = start; i < token.size(); ++i) {
        const int digit = hex_value(token[i]);
        if (digit < 0)
            throw FormatError("trace line " + std::to_string(line_no) + ": bad hex address '" +
                              token + "'");
        if (value > (UINT64_MAX >> 4))
            throw FormatError("trace line " + std::to_string(line_no) + ": address overflows");
        value = (value << 4) | static_cast<std::uint64_t>(digit);
    }
    return value;
}

std::vector<std::uint8_t> parse_hex_pattern(const std::string& token, std::size_t line_no) {
    if (token.empty() || token.size() % 2 != 0)
        throw FormatError("trace line " + std::to_string(line_no) +
                          ": pattern needs an even number of hex digits");
    std::vector<std::uint8_t> bytes;
    bytes.reserve(token.size() / 2);
    for (std::size_t i = 0; i < token.size(); i += 2) {
        const int hi = hex_value(token[i]);
        const int lo = hex_value(token[i + 1]);
        if (hi < 0 || lo < 0)
            throw FormatError("trace line " + std::to_string(line_no) + ": bad hex pattern '" +
                              token + "'");
        bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return bytes;
}

} // namespace

std::vector<Request> parse_trace_text(const std::string& text) {
    std::vector<Request> trace;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string op, addr, pattern, extra;
        if (!(fields >> op) || op[0] == '#')
            continue;
        Request req;
        if (op == "R") {
            if (!(fields >> addr))
                throw FormatError("trace line " + std::to_string(line_no) + ": R needs an address");
            req.op = Request::Op::Read;
            req.addr = parse_hex_addr(addr, line_no);
        } else if (op == "W") {
            if (!(fields >> addr >> pattern))
                throw FormatError("trace line " + std::to_string(line_no) +
                                  ": W needs an address and a byte pattern");
            req.op = Request::Op::Write;
            req.addr = parse_hex_addr(addr, line_no);
            req.pattern = parse_hex_pattern(pattern, line_no);
        } else {
            throw FormatError("trace line " + std::to_string(line_no) + ": unknown op '" + op +
                              "' (expected R or W)");
        }
        if (fields >> extra)
            throw FormatError("trace line " + std::to_string(line_no) + ": trailing junk '" +
                              extra + "'");
        trace.push_back(std::move(req));
    }
    return trace;
}

std::vector<Request> load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FormatError("trace: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_trace_text(text);
}

std::string trace_to_text(const std::vector<Request>& trace) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (const auto& req : trace) {
        char addr_buf[19];
        std::snprintf(addr_buf, sizeof addr_buf, "0x%llx",
                      static_cast<unsigned long long>(req.addr));
        if (req.op == Request::Op::Read) {
            out += "R ";
            out += addr_buf;
        } else {
            out += "W ";
            out += addr_buf;
            out += ' ';
            for (std::uint8_t b : req.pattern) {
                out += hex[b >> 4];
                out += hex[b & 0xF];
            }
        }
        out += '\n';
    }
    return out;
}

void save_trace(const std::vector<Request>& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw FormatError("trace: cannot write " + path);
    out << trace_to_text(trace);
}

} // namespace hammersim
