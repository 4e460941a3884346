#pragma once

#include "hammersim/geometry.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace hammersim {

/// Per-(bank,row) data storage. Rows are allocated lazily and read as
/// all-zeros until first written; bits are LSB-first within each byte.
class CellArray {
  public:
    explicit CellArray(const Geometry& geom) : geom_(geom) {}

    /// Copy of the row contents, row_bytes() long.
    std::vector<std::uint8_t> read_row(RowAddress addr) const;

    /// Replaces the row contents. Throws FormatError on a length mismatch.
    void write_row(RowAddress addr, const std::vector<std::uint8_t>& data);

    /// Fills the row by repeating `pattern` cyclically (trace `W` semantics).
    void fill_row(RowAddress addr, const std::vector<std::uint8_t>& pattern);

    bool get_bit(RowAddress addr, std::uint64_t bit) const;
    void set_bit(RowAddress addr, std::uint64_t bit, bool value);

    /// Inverts one stored bit and returns its new value.
    bool flip_bit(RowAddress addr, std::uint64_t bit);

    const Geometry& geometry() const { return geom_; }

  private:
    std::uint64_t key(RowAddress addr) const;
    void check(RowAddress addr) const;
    std::vector<std::uint8_t>& row_storage(RowAddress addr);

    Geometry geom_;
    std::unordered_map<std::uint64_t, std::vector<std::uint8_t>> rows_;
};

} // namespace hammersim
