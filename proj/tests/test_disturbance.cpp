#include "hammersim/disturbance.hpp"
#include "hammersim/errors.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace hammersim;

namespace {

Geometry bench_geometry(std::uint32_t banks = 1, std::uint32_t rows = 8) {
    Geometry geom;
    geom.banks = banks;
    geom.rows_per_bank = rows;
    geom.row_size_bits = 64;
    geom.page_size_bits = 64;
    return geom;
}

VulnerableCell bench_cell(std::uint64_t threshold,
                          PatternGate gate = PatternGate::RequiresStoredOne,
                          CoupledSide side = CoupledSide::Either, std::uint64_t bit = 17) {
    VulnerableCell cell;
    cell.bank = 0;
    cell.victim_row = 3;
    cell.bit = bit;
    cell.threshold = threshold;
    cell.flip_direction =
        gate == PatternGate::RequiresStoredZero ? FlipDirection::ZeroToOne : FlipDirection::OneToZero;
    cell.pattern_gate = gate;
    cell.coupled_side = side;
    return cell;
}

struct Bench {
    Geometry geom;
    CellArray cells;
    DisturbanceEngine engine;

    Bench(const Geometry& g, DisturbanceProfile profile)
        : geom(g), cells(g), engine(g, RemapTable{}, std::move(profile)) {}

    void fill(std::uint32_t row, std::uint8_t byte) {
        cells.fill_row({0, row}, {byte});
    }

    std::vector<FlipEvent> activate(std::uint32_t row, Ns time) {
        return engine.on_activate({0, row}, time, cells);
    }
};

} // namespace

TEST_CASE("a cell flips exactly when its threshold is reached") {
    Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(5)}});
    bench.fill(3, 0xFF);

    std::vector<FlipEvent> all;
    for (Ns t = 1; t <= 5; ++t) {
        auto flips = bench.activate(2, t);
        if (t < 5)
            CHECK(flips.empty());
        all.insert(all.end(), flips.begin(), flips.end());
    }
    REQUIRE(all.size() == 1);
    CHECK(all[0].row == 3);
    CHECK(all[0].bit == 17);
    CHECK(all[0].time == 5);
    CHECK(all[0].aggressor_row == 2);
    CHECK(all[0].direction == FlipDirection::OneToZero);
    CHECK_FALSE(bench.cells.get_bit({0, 3}, 17));

    // one flip per window: further hammering does not re-fire
    CHECK(bench.activate(2, 6).empty());
}

TEST_CASE("below-threshold exposure never flips") {
    Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(5)}});
    bench.fill(3, 0xFF);
    for (Ns t = 1; t <= 4; ++t)
        CHECK(bench.activate(2, t).empty());
    CHECK(bench.cells.get_bit({0, 3}, 17));
}

TEST_CASE("pattern gate blocks flips when the stored bit mismatches") {
    Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(5)}});
    bench.fill(3, 0x00); // gate requires a stored one
    for (Ns t = 1; t <= 40; ++t)
        CHECK(bench.activate(2, t).empty());
}

TEST_CASE("either-coupled exposure sums both sides") {
    Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(5)}});
    bench.fill(3, 0xFF);
    CHECK(bench.activate(2, 1).empty());
    CHECK(bench.activate(2, 2).empty());
    CHECK(bench.activate(2, 3).empty());
    CHECK(bench.activate(4, 4).empty());
    auto flips = bench.activate(4, 5); // 3 left + 2 right = threshold
    REQUIRE(flips.size() == 1);
    CHECK(flips[0].aggressor_row == 4);
}

TEST_CASE("single-sided coupling ignores the other side") {
    // row 2 sits physically left of victim 3
    auto left_cell = bench_cell(3, PatternGate::RequiresStoredOne, CoupledSide::LeftOnly);
    Bench bench(bench_geometry(), DisturbanceProfile{{left_cell}});
    bench.fill(3, 0xFF);
    for (Ns t = 1; t <= 20; ++t)
        CHECK(bench.activate(4, t).empty()); // right-side hammering only
    CHECK(bench.activate(2, 21).empty());
    CHECK(bench.activate(2, 22).empty());
    CHECK(bench.activate(2, 23).size() == 1);
}

TEST_CASE("refresh resets the window mid-hammer") {
    Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(5)}});
    bench.fill(3, 0xFF);
    for (Ns t = 1; t <= 4; ++t)
        CHECK(bench.activate(2, t).empty());
    bench.engine.on_refresh({0, 3}, 5);
    for (Ns t = 6; t <= 9; ++t)
        CHECK(bench.activate(2, t).empty()); // window restarted: 4 + 4 < 5 + 5
    CHECK(bench.activate(2, 10).size() == 1);
}

TEST_CASE("refresh of an idle row keeps counters at zero") {
    Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(5)}});
    bench.engine.on_refresh({0, 6}, 10);
    const auto& st = bench.engine.ledger().state({0, 6});
    CHECK(st.exposure_left == 0);
    CHECK(st.exposure_right == 0);
    CHECK(st.last_refresh_time == 10);
}

TEST_CASE("the gate is re-evaluated against the stored bit after a flip") {
    Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(5)}});
    bench.fill(3, 0xFF);
    for (Ns t = 1; t <= 5; ++t)
        bench.activate(2, t);
    CHECK_FALSE(bench.cells.get_bit({0, 3}, 17)); // flipped away from the gated value

    bench.engine.on_refresh({0, 3}, 6); // new window, data still corrupted
    for (Ns t = 7; t <= 30; ++t)
        CHECK(bench.activate(2, t).empty()); // gate now fails: no second flip
    CHECK_FALSE(bench.cells.get_bit({0, 3}, 17));
}

TEST_CASE("refresh restores the window but never the data") {
    Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(2)}});
    bench.fill(3, 0xFF);
    bench.activate(2, 1);
    bench.activate(2, 2);
    CHECK_FALSE(bench.cells.get_bit({0, 3}, 17));
    bench.engine.on_refresh({0, 3}, 3);
    CHECK_FALSE(bench.cells.get_bit({0, 3}, 17));
    // rewriting the row does restore it
    bench.fill(3, 0xFF);
    CHECK(bench.cells.get_bit({0, 3}, 17));
}

TEST_CASE("activation time must be monotonic") {
    Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(5)}});
    bench.activate(2, 10);
    CHECK_THROWS_AS(bench.activate(2, 9), UsageError);
    CHECK_NOTHROW(bench.activate(2, 10)); // equal timestamps are fine
}

TEST_CASE("threshold exactness, engine level, T in [1,64]") {
    for (std::uint64_t threshold = 1; threshold <= 64; ++threshold) {
        Bench bench(bench_geometry(), DisturbanceProfile{{bench_cell(threshold)}});
        bench.fill(3, 0xFF);
        std::size_t flips = 0;
        for (Ns t = 1; t < threshold; ++t)
            flips += bench.activate(2, t).size();
        CHECK(flips == 0);
        CHECK(bench.activate(2, threshold).size() == 1);
    }
}

TEST_CASE("aggressor rows are never flipped") {
    std::mt19937 gen(77);
    for (int trial = 0; trial < 40; ++trial) {
        const Geometry geom = bench_geometry(2, 8);
        DisturbanceProfile profile;
        for (int c = 0; c < 6; ++c) {
            VulnerableCell cell;
            cell.bank = gen() % 2;
            cell.victim_row = gen() % 8;
            cell.bit = gen() % 64;
            cell.threshold = 1 + gen() % 6;
            cell.pattern_gate = PatternGate::Always;
            cell.coupled_side = CoupledSide::Either;
            profile.cells.push_back(cell);
        }
        try {
            profile.validate(geom);
        } catch (const FormatError&) {
            continue; // duplicate draw
        }
        CellArray cells(geom);
        DisturbanceEngine engine(geom, RemapTable{}, profile);
        for (Ns t = 1; t <= 200; ++t) {
            const RowAddress agg{gen() % 2, gen() % 8};
            for (const FlipEvent& ev : engine.on_activate(agg, t, cells)) {
                CHECK(ev.row != ev.aggressor_row);
                CHECK(ev.aggressor_row == agg.row);
                CHECK(ev.bank == agg.bank);
                CHECK(ev.row != agg.row);
            }
        }
    }
}

TEST_CASE("profile validation rejects bad entries") {
    const Geometry geom = bench_geometry();

    DisturbanceProfile dup{{bench_cell(5), bench_cell(9)}};
    CHECK_THROWS_AS(dup.validate(geom), FormatError);

    DisturbanceProfile zero{{bench_cell(0)}};
    CHECK_THROWS_AS(zero.validate(geom), FormatError);

    DisturbanceProfile far_bit{{bench_cell(5, PatternGate::Always, CoupledSide::Either, 64)}};
    CHECK_THROWS_AS(far_bit.validate(geom), FormatError);

    DisturbanceProfile bad_row{{bench_cell(5)}};
    bad_row.cells[0].victim_row = 8;
    CHECK_THROWS_AS(bad_row.validate(geom), FormatError);
}

TEST_CASE("identical traces produce identical flip logs") {
    auto run = [] {
        Bench bench(bench_geometry(),
                    DisturbanceProfile{{bench_cell(3), bench_cell(7, PatternGate::Always,
                                                                  CoupledSide::Either, 31)}});
        bench.fill(3, 0xFF);
        std::vector<FlipEvent> log;
        std::mt19937 gen(99);
        for (Ns t = 1; t <= 60; ++t) {
            auto flips = bench.activate(gen() % 8, t);
            log.insert(log.end(), flips.begin(), flips.end());
        }
        return log;
    };
    CHECK(run() == run());
}

TEST_CASE("extending a trace never removes earlier flips") {
    std::mt19937 gen(4242);
    for (int trial = 0; trial < 20; ++trial) {
        DisturbanceProfile profile{
            {bench_cell(2 + gen() % 5, PatternGate::Always, CoupledSide::Either, gen() % 64)}};
        std::vector<std::uint32_t> prefix, suffix;
        for (int i = 0; i < 30; ++i)
            prefix.push_back(gen() % 8);
        for (int i = 0; i < 30; ++i)
            suffix.push_back(gen() % 8);

        auto run = [&](const std::vector<std::uint32_t>& rows) {
            Bench bench(bench_geometry(), profile);
            bench.fill(3, 0xFF);
            std::vector<FlipEvent> log;
            Ns t = 1;
            for (std::uint32_t row : rows) {
                auto flips = bench.activate(row, t++);
                log.insert(log.end(), flips.begin(), flips.end());
            }
            return log;
        };

        const auto short_log = run(prefix);
        auto full = prefix;
        full.insert(full.end(), suffix.begin(), suffix.end());
        const auto long_log = run(full);

        REQUIRE(long_log.size() >= short_log.size());
        for (std::size_t i = 0; i < short_log.size(); ++i)
            CHECK(long_log[i] == short_log[i]);
    }
}

TEST_CASE("inverting stored data moves the flip set per the gates") {
    auto cell_one = bench_cell(4, PatternGate::RequiresStoredOne, CoupledSide::Either, 1);
    auto cell_zero = bench_cell(4, PatternGate::RequiresStoredZero, CoupledSide::Either, 2);
    auto cell_any = bench_cell(4, PatternGate::Always, CoupledSide::Either, 3);
    const DisturbanceProfile profile{{cell_one, cell_zero, cell_any}};

    auto flipped_bits = [&](std::uint8_t fill) {
        Bench bench(bench_geometry(), profile);
        bench.fill(3, fill);
        std::vector<std::uint64_t> bits;
        for (Ns t = 1; t <= 4; ++t)
            for (const auto& ev : bench.activate(2, t))
                bits.push_back(ev.bit);
        return bits;
    };

    CHECK(flipped_bits(0xFF) == std::vector<std::uint64_t>{1, 3});
    CHECK(flipped_bits(0x00) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("read-back differs from written data only at logged flips") {
    std::mt19937 gen(555);
    for (int trial = 0; trial < 10; ++trial) {
        const Geometry geom = bench_geometry();
        DisturbanceProfile profile;
        for (int c = 0; c < 4; ++c) {
            VulnerableCell cell;
            cell.victim_row = 1 + gen() % 6;
            cell.bit = gen() % 64;
            cell.threshold = 1 + gen() % 8;
            cell.pattern_gate = PatternGate::Always;
            profile.cells.push_back(cell);
        }
        try {
            profile.validate(geom);
        } catch (const FormatError&) {
            continue; // duplicate draw
        }
        CellArray cells(geom);
        DisturbanceEngine engine(geom, RemapTable{}, profile);
        std::vector<std::uint8_t> written(8, 0xA5);
        for (std::uint32_t row = 0; row < 8; ++row)
            cells.write_row({0, row}, written);

        std::vector<FlipEvent> log;
        for (Ns t = 1; t <= 100; ++t) {
            auto flips = engine.on_activate({0, gen() % 8}, t, cells);
            log.insert(log.end(), flips.begin(), flips.end());
        }

        std::vector<std::vector<std::uint8_t>> expected(8, written);
        for (const auto& ev : log)
            expected[ev.row][ev.bit / 8] ^= static_cast<std::uint8_t>(1u << (ev.bit % 8));
        for (std::uint32_t row = 0; row < 8; ++row)
            CHECK(cells.read_row({0, row}) == expected[row]);
    }
}
