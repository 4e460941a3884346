#include "hammersim/geometry.hpp"

#include "hammersim/errors.hpp"

#include <algorithm>
#include <string>

namespace hammersim {

void Geometry::validate() const {
    if (banks < 1)
        throw RangeError("geometry: banks must be >= 1");
    if (rows_per_bank < 2)
        throw RangeError("geometry: rows_per_bank must be >= 2");
    if (row_size_bits < 8 || row_size_bits % 8 != 0)
        throw RangeError("geometry: row_size_bits must be >= 8 and a multiple of 8");
    if (page_size_bits == 0 ||
        (row_size_bits % page_size_bits != 0 && page_size_bits % row_size_bits != 0))
        throw RangeError("geometry: page_size_bits must divide row_size_bits or be a multiple of it");
    // total bit count must fit a 64-bit counter
    const unsigned __int128 total_bits = static_cast<unsigned __int128>(banks) * rows_per_bank * row_size_bits;
    if (total_bits > UINT64_MAX)
        throw RangeError("geometry: total capacity overflows a 64-bit bit count");
}

DecodedAddress map_address(std::uint64_t addr, const Geometry& geom) {
    const std::uint64_t capacity = geom.capacity_bytes();
    if (addr >= capacity)
        throw RangeError("address " + std::to_string(addr) + " out of range: capacity is " +
                         std::to_string(capacity) + " bytes");
    const std::uint64_t row_bytes = geom.row_bytes();
    const std::uint64_t block = addr / row_bytes;
    DecodedAddress out;
    out.row.bank = static_cast<std::uint32_t>(block % geom.banks);
    out.row.row = static_cast<std::uint32_t>(block / geom.banks);
    out.column_bit = (addr % row_bytes) * 8;
    return out;
}

std::uint64_t encode_address(RowAddress row, std::uint64_t column_bit, const Geometry& geom) {
    if (row.bank >= geom.banks || row.row >= geom.rows_per_bank)
        throw RangeError("encode_address: row address out of range");
    if (column_bit >= geom.row_size_bits)
        throw RangeError("encode_address: column bit out of range");
    const std::uint64_t block = static_cast<std::uint64_t>(row.row) * geom.banks + row.bank;
    return block * geom.row_bytes() + column_bit / 8;
}

RemapTable::RemapTable(std::vector<std::uint32_t> logical_to_physical)
    : to_physical_(std::move(logical_to_physical)) {
    to_logical_.assign(to_physical_.size(), 0);
    for (std::uint32_t logical = 0; logical < to_physical_.size(); ++logical) {
        const std::uint32_t phys = to_physical_[logical];
        if (phys < to_logical_.size())
            to_logical_[phys] = logical;
    }
}

std::uint32_t RemapTable::to_physical(std::uint32_t logical) const {
    if (to_physical_.empty())
        return logical;
    if (logical >= to_physical_.size())
        throw RangeError("remap: logical row out of range");
    return to_physical_[logical];
}

std::uint32_t RemapTable::to_logical(std::uint32_t physical) const {
    if (to_physical_.empty())
        return physical;
    if (physical >= to_logical_.size())
        throw RangeError("remap: physical row out of range");
    return to_logical_[physical];
}

void RemapTable::validate(std::uint32_t rows_per_bank) const {
    if (to_physical_.empty())
        return;
    if (to_physical_.size() != rows_per_bank)
        throw RangeError("remap: table must cover exactly rows_per_bank entries");
    std::vector<bool> seen(rows_per_bank, false);
    for (std::uint32_t phys : to_physical_) {
        if (phys >= rows_per_bank)
            throw RangeError("remap: physical index " + std::to_string(phys) + " out of range");
        if (seen[phys])
            throw RangeError("remap: physical index " + std::to_string(phys) + " appears twice");
        seen[phys] = true;
    }
}

std::vector<std::uint32_t> physical_neighbors(std::uint32_t row, const RemapTable& remap,
                                              std::uint32_t rows_per_bank) {
    if (row >= rows_per_bank)
        throw RangeError("physical_neighbors: row out of range");
    const std::uint32_t phys = remap.to_physical(row);
    std::vector<std::uint32_t> out;
    if (phys > 0)
        out.push_back(remap.to_logical(phys - 1));
    if (phys + 1 < rows_per_bank)
        out.push_back(remap.to_logical(phys + 1));
    return out;
}

} // namespace hammersim
