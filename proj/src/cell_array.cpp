#include "hammersim/cell_array.hpp"

#include "hammersim/errors.hpp"

#include <string>

namespace hammersim {

std::uint64_t CellArray::key(RowAddress addr) const {
    return static_cast<std::uint64_t>(addr.bank) * geom_.rows_per_bank + addr.row;
}

void CellArray::check(RowAddress addr) const {
    if (addr.bank >= geom_.banks || addr.row >= geom_.rows_per_bank)
        throw RangeError("cell array: row address (bank " + std::to_string(addr.bank) + ", row " +
                         std::to_string(addr.row) + ") out of range");
}

std::vector<std::uint8_t>& CellArray::row_storage(RowAddress addr) {
    check(addr);
    auto [it, inserted] = rows_.try_emplace(key(addr));
    if (inserted)
        it->second.assign(geom_.row_bytes(), 0);
    return it->second;
}

std::vector<std::uint8_t> CellArray::read_row(RowAddress addr) const {
    check(addr);
    auto it = rows_.find(key(addr));
    if (it == rows_.end())
        return std::vector<std::uint8_t>(geom_.row_bytes(), 0);
    return it->second;
}

void CellArray::write_row(RowAddress addr, const std::vector<std::uint8_t>& data) {
    check(addr);
    if (data.size() != geom_.row_bytes())
        throw FormatError("write_row: expected " + std::to_string(geom_.row_bytes()) +
                          " bytes, got " + std::to_string(data.size()));
    row_storage(addr) = data;
}

void CellArray::fill_row(RowAddress addr, const std::vector<std::uint8_t>& pattern) {
    check(addr);
    if (pattern.empty())
        throw FormatError("fill_row: empty pattern");
    auto& row = row_storage(addr);
    for (std::size_t i = 0; i < row.size(); ++i)
        row[i] = pattern[i % pattern.size()];
}

bool CellArray::get_bit(RowAddress addr, std::uint64_t bit) const {
    check(addr);
    if (bit >= geom_.row_size_bits)
        throw RangeError("get_bit: bit index out of range");
    auto it = rows_.find(key(addr));
    if (it == rows_.end())
        return false;
    return (it->second[bit / 8] >> (bit % 8)) & 1u;
}

void CellArray::set_bit(RowAddress addr, std::uint64_t bit, bool value) {
    if (bit >= geom_.row_size_bits)
        throw RangeError("set_bit: bit index out of range");
    auto& row = row_storage(addr);
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (bit % 8));
    if (value)
        row[bit / 8] |= mask;
    else
        row[bit / 8] &= static_cast<std::uint8_t>(~mask);
}

bool CellArray::flip_bit(RowAddress addr, std::uint64_t bit) {
    if (bit >= geom_.row_size_bits)
        throw RangeError("flip_bit: bit index out of range");
    auto& row = row_storage(addr);
    row[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    return (row[bit / 8] >> (bit % 8)) & 1u;
}

} // namespace hammersim
