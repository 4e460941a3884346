#pragma once

#include <cstdint>
#include <vector>

namespace hammersim {

using Ns = std::uint64_t; ///< simulation time in nanoseconds

/// DRAM topology: single channel, single rank, banks x rows x row bits.
struct Geometry {
    std::uint32_t banks = 1;
    std::uint32_t rows_per_bank = 8;
    std::uint64_t row_size_bits = 8192;
    std::uint64_t page_size_bits = 8192; ///< OS page granularity; defaults to one page per row

    std::uint64_t row_bytes() const { return row_size_bits / 8; }
    std::uint64_t capacity_bytes() const {
        return static_cast<std::uint64_t>(banks) * rows_per_bank * row_bytes();
    }

    /// Throws RangeError on an inconsistent topology.
    void validate() const;
};

struct RowAddress {
    std::uint32_t bank = 0;
    std::uint32_t row = 0;

    bool operator==(const RowAddress&) const = default;
};

/// Decoded byte address: the row plus the bit offset within it.
struct DecodedAddress {
    RowAddress row;
    std::uint64_t column_bit = 0;

    bool operator==(const DecodedAddress&) const = default;
};

/// Row-interleaved bank map: consecutive row-sized blocks alternate banks.
///   bank   = (addr / row_bytes) % banks
///   row    = addr / (row_bytes * banks)
///   column = (addr % row_bytes) * 8
/// Bijective over [0, capacity). Throws RangeError past capacity.
DecodedAddress map_address(std::uint64_t addr, const Geometry& geom);

/// Inverse of map_address: byte address of (bank,row) at the given bit column.
std::uint64_t encode_address(RowAddress row, std::uint64_t column_bit, const Geometry& geom);

/// Logical-to-physical row permutation, identity unless configured otherwise.
/// Adjacency is defined on physical positions; the same permutation applies
/// in every bank.
class RemapTable {
  public:
    RemapTable() = default; ///< identity
    explicit RemapTable(std::vector<std::uint32_t> logical_to_physical);

    bool is_identity() const { return to_physical_.empty(); }
    std::uint32_t to_physical(std::uint32_t logical) const;
    std::uint32_t to_logical(std::uint32_t physical) const;

    /// Throws RangeError unless the table is a bijection over [0, rows_per_bank).
    void validate(std::uint32_t rows_per_bank) const;

    const std::vector<std::uint32_t>& table() const { return to_physical_; }

  private:
    std::vector<std::uint32_t> to_physical_; // empty = identity
    std::vector<std::uint32_t> to_logical_;
};

/// Logical rows whose physical positions are +-1 from the given row's physical
/// position. Edge rows get one neighbor, interior rows two. Result is ordered
/// physically-left neighbor first.
std::vector<std::uint32_t> physical_neighbors(std::uint32_t row, const RemapTable& remap,
                                              std::uint32_t rows_per_bank);

} // namespace hammersim
