#include "hammersim/cell_array.hpp"
#include "hammersim/errors.hpp"
#include "hammersim/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace hammersim;

namespace {

Geometry small_geometry() {
    Geometry geom;
    geom.banks = 2;
    geom.rows_per_bank = 8;
    geom.row_size_bits = 8192;
    geom.page_size_bits = 8192;
    return geom;
}

} // namespace

TEST_CASE("map_address decodes the row-interleaved layout") {
    const Geometry geom = small_geometry();
    CHECK(map_address(0, geom) == DecodedAddress{{0, 0}, 0});
    // row_bytes = 1024: the second row-sized block lands in the next bank
    CHECK(map_address(1024, geom) == DecodedAddress{{1, 0}, 0});
    CHECK(map_address(2048, geom) == DecodedAddress{{0, 1}, 0});
    CHECK(map_address(1027, geom) == DecodedAddress{{1, 0}, 24});
}

TEST_CASE("map_address rejects addresses past capacity, naming it") {
    const Geometry geom = small_geometry(); // 2 * 8 * 1024 = 16384 bytes
    CHECK_THROWS_WITH_AS(map_address(16384, geom),
                         doctest::Contains("16384"), RangeError);
    CHECK_NOTHROW(map_address(16383, geom));
}

TEST_CASE("map_address is a bijection over the full address space") {
    const Geometry geom = small_geometry();
    const std::uint64_t capacity = geom.capacity_bytes();
    REQUIRE(capacity <= (1u << 16));
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> seen;
    for (std::uint64_t addr = 0; addr < capacity; ++addr) {
        const DecodedAddress d = map_address(addr, geom);
        CHECK(d.row.bank < geom.banks);
        CHECK(d.row.row < geom.rows_per_bank);
        CHECK(d.column_bit < geom.row_size_bits);
        CHECK(d.column_bit % 8 == 0); // byte-granular addressing
        seen.emplace(d.row.bank, d.row.row, d.column_bit);
        CHECK(encode_address(d.row, d.column_bit, geom) == addr);
    }
    CHECK(seen.size() == capacity); // no collisions, every byte-triple hit
}

TEST_CASE("physical_neighbors with the identity remap") {
    const RemapTable identity;
    CHECK(physical_neighbors(0, identity, 8) == std::vector<std::uint32_t>{1});
    CHECK(physical_neighbors(7, identity, 8) == std::vector<std::uint32_t>{6});
    CHECK(physical_neighbors(5, identity, 8) == std::vector<std::uint32_t>{4, 6});
    CHECK_THROWS_AS(physical_neighbors(8, identity, 8), RangeError);
}

TEST_CASE("physical_neighbors follows the remap table") {
    // swap the physical positions of rows 3 and 7
    std::vector<std::uint32_t> table{0, 1, 2, 7, 4, 5, 6, 3};
    const RemapTable remap(table);
    remap.validate(8);
    auto neighbors = physical_neighbors(2, remap, 8);
    std::sort(neighbors.begin(), neighbors.end());
    CHECK(neighbors == std::vector<std::uint32_t>{1, 7});
}

TEST_CASE("remap validation rejects non-bijections") {
    CHECK_THROWS_AS(RemapTable({0, 0, 2, 3}).validate(4), RangeError);
    CHECK_THROWS_AS(RemapTable({0, 1, 2, 4}).validate(4), RangeError);
    CHECK_THROWS_AS(RemapTable({0, 1, 2}).validate(4), RangeError);
    CHECK_NOTHROW(RemapTable({3, 1, 0, 2}).validate(4));
}

TEST_CASE("neighbor relation is symmetric under random bijective remaps") {
    std::mt19937 gen(1234);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t rows = 2 + gen() % 30;
        std::vector<std::uint32_t> perm(rows);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), gen);
        const RemapTable remap(perm);
        remap.validate(rows);

        std::uint32_t edge_rows = 0;
        for (std::uint32_t a = 0; a < rows; ++a) {
            const auto na = physical_neighbors(a, remap, rows);
            CHECK(na.size() >= 1);
            CHECK(na.size() <= 2);
            const bool is_edge = remap.to_physical(a) == 0 || remap.to_physical(a) == rows - 1;
            CHECK(na.size() == (is_edge ? 1u : 2u));
            edge_rows += is_edge;
            for (std::uint32_t b : na) {
                const auto nb = physical_neighbors(b, remap, rows);
                CHECK(std::find(nb.begin(), nb.end(), a) != nb.end());
            }
        }
        CHECK(edge_rows == 2);
    }
}

TEST_CASE("rows read back what was written") {
    const Geometry geom = small_geometry();
    CellArray cells(geom);
    const RowAddress row{1, 3};

    CHECK(cells.read_row(row) == std::vector<std::uint8_t>(1024, 0x00));

    std::vector<std::uint8_t> zeros(1024, 0x00);
    cells.write_row(row, zeros);
    CHECK(cells.read_row(row) == zeros);

    std::vector<std::uint8_t> aa(1024, 0xAA);
    cells.write_row(row, aa);
    CHECK(cells.read_row(row) == aa);

    CHECK_THROWS_AS(cells.write_row(row, std::vector<std::uint8_t>(100, 0)), FormatError);
    CHECK_THROWS_AS(cells.read_row({2, 0}), RangeError);
    CHECK_THROWS_AS(cells.read_row({0, 8}), RangeError);
}

TEST_CASE("a single injected flip inverts exactly one bit") {
    const Geometry geom = small_geometry();
    CellArray cells(geom);
    const RowAddress row{0, 3};
    std::vector<std::uint8_t> pattern(1024, 0xAA);
    cells.write_row(row, pattern);

    cells.flip_bit(row, 17);

    std::vector<std::uint8_t> expected = pattern;
    expected[17 / 8] ^= static_cast<std::uint8_t>(1u << (17 % 8)); // XOR oracle
    CHECK(cells.read_row(row) == expected);

    cells.flip_bit(row, 17);
    CHECK(cells.read_row(row) == pattern);
}

TEST_CASE("fill_row repeats the pattern cyclically") {
    const Geometry geom = small_geometry();
    CellArray cells(geom);
    cells.fill_row({0, 0}, {0xDE, 0xAD});
    const auto row = cells.read_row({0, 0});
    CHECK(row[0] == 0xDE);
    CHECK(row[1] == 0xAD);
    CHECK(row[1022] == 0xDE);
    CHECK(row[1023] == 0xAD);
}

TEST_CASE("geometry validation") {
    Geometry geom = small_geometry();
    CHECK_NOTHROW(geom.validate());

    geom.rows_per_bank = 1;
    CHECK_THROWS_AS(geom.validate(), RangeError);

    geom = small_geometry();
    geom.row_size_bits = 12;
    CHECK_THROWS_AS(geom.validate(), RangeError);

    geom = small_geometry();
    geom.page_size_bits = 8192 * 4; // multiple of the row: allowed
    CHECK_NOTHROW(geom.validate());
    geom.page_size_bits = 4096; // divides the row: allowed
    CHECK_NOTHROW(geom.validate());
    geom.page_size_bits = 3000;
    CHECK_THROWS_AS(geom.validate(), RangeError);
}
