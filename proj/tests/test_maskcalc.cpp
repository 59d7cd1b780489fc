#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "palinruler/maskcalc.hpp"

using namespace palinruler;

TEST_CASE("mask words") {
    CHECK(mask_word(MaskOp::type_a(5, 1)).str() == "01111");
    CHECK(mask_word(MaskOp::type_a(5, 0)).str() == "11111");
    CHECK(mask_word(MaskOp::type_a(5, 5)).str() == "00000");
    CHECK(MaskOp::type_a(5, 5).is_identity());
    CHECK(mask_word(MaskOp::type_b(5, 1, 4)).str() == "11110");
    CHECK(mask_word(MaskOp::type_b(5, 1, 2)).str() == "11011");
    CHECK(mask_word(MaskOp::type_b(7, 2, 2)).str() == "0110111");
    CHECK(MaskOp::type_b(5, 1, 2).str() == "B(5,1,2)");
    CHECK(MaskOp::type_a(5, 1).str() == "A(5,1)");
}

TEST_CASE("mask validation diagnostics") {
    CHECK_THROWS_AS(MaskOp::type_a(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(MaskOp::type_a(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(MaskOp::type_b(5, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(MaskOp::type_b(5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(MaskOp::type_b(5, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(MaskOp::type_b(2, 1, 2), std::invalid_argument);
}

TEST_CASE("mask application is a XOR involution") {
    const BinaryWord w = BinaryWord::parse("10001");
    CHECK(apply_mask(MaskOp::type_b(5, 1, 4), w).str() == "01111");
    CHECK(apply_mask(MaskOp::type_a(5, 5), w) == w);
    CHECK_THROWS_AS(apply_mask(MaskOp::type_a(4, 1), w), std::invalid_argument);

    std::uint32_t state = 12345;
    for (int trial = 0; trial < 50; ++trial) {
        state = state * 1103515245 + 12345;
        const std::uint32_t len = 2 + state % 19;
        const std::uint32_t bits = (state >> 8) & ((1u << len) - 1);
        const BinaryWord word = uint_to_word(bits, len);
        for (const auto& op : all_masks(len, true)) {
            const BinaryWord once = apply_mask(op, word);
            CHECK(apply_mask(op, once) == word);
        }
    }
}

TEST_CASE("canonical mask order") {
    const auto masks = all_masks(5, true);
    REQUIRE(masks.size() == 11);  // 5 type A + 6 type B
    CHECK(masks[0] == MaskOp::type_a(5, 0));
    CHECK(masks[4] == MaskOp::type_a(5, 4));
    CHECK(masks[5] == MaskOp::type_b(5, 1, 2));
    CHECK(masks[6] == MaskOp::type_b(5, 1, 3));
    CHECK(masks[7] == MaskOp::type_b(5, 1, 4));
    CHECK(masks[8] == MaskOp::type_b(5, 2, 2));
    CHECK(masks[10] == MaskOp::type_b(5, 3, 2));
    for (const auto& m : masks) CHECK(!m.is_identity());
    CHECK(all_masks(5, false).size() == 5);
}

TEST_CASE("type B masks decompose into three type A masks") {
    for (std::uint32_t len = 3; len <= 8; ++len)
        for (std::uint32_t t = 1; t + 2 <= len; ++t)
            for (std::uint32_t s = 2; t + s <= len; ++s) {
                const MaskOp b = MaskOp::type_b(len, t, s);
                const OpSequence three = compose_b_as_three_a(b);
                REQUIRE(three.ops.size() == 3);
                CHECK(three.ops[0] == MaskOp::type_a(len, t - 1));
                CHECK(three.ops[1] == MaskOp::type_a(len, t + s - 1));
                CHECK(three.ops[2] == MaskOp::type_a(len, t + s));
                CHECK(apply_sequence(three, BinaryWord::zeros(len)) == mask_word(b));
            }
    CHECK_THROWS_AS(compose_b_as_three_a(MaskOp::type_a(5, 1)), std::invalid_argument);
}

TEST_CASE("run delta stays within three") {
    // A type B mask applied to its own word erases all value runs at once.
    const MaskOp op = MaskOp::type_b(7, 2, 2);
    CHECK(run_delta(mask_word(op), op) == -3);

    for (std::uint32_t len = 2; len <= 12; ++len)
        for (const auto& m : all_masks(len, true))
            for (std::uint32_t v = 0; v < (1u << len); ++v) {
                const int d = run_delta(uint_to_word(v, len), m);
                CHECK(d >= -3);
                CHECK(d <= 3);
            }
}

TEST_CASE("type A solver matches the run count") {
    const SolveResult r1 = min_ops_type_a(BinaryWord::parse("10001"));
    CHECK(r1.count == 3);
    CHECK(r1.ops.ops.size() == 3);
    CHECK(apply_sequence(r1.ops, BinaryWord::parse("10001")).all_zero());

    const SolveResult r2 = min_ops_type_a(BinaryWord::parse("10101"));
    CHECK(r2.count == 5);
    CHECK(apply_sequence(r2.ops, BinaryWord::parse("10101")).all_zero());

    CHECK(min_ops_type_a(BinaryWord::zeros(6)).count == 0);
    CHECK(min_ops_type_a(BinaryWord{}).count == 0);
    CHECK_THROWS_AS(min_ops_type_a(BinaryWord::parse("0101")), std::invalid_argument);

    // Exhaustive cross-validation against breadth-first search.
    for (std::uint32_t len = 1; len <= 10; ++len) {
        const MaskSolver solver(len, false);
        for (std::uint32_t v = 1u << (len - 1); v < (1u << len); ++v) {
            const BinaryWord w = uint_to_word(v, len);
            const SolveResult res = min_ops_type_a(w);
            CHECK(res.count == value_run_count(w));
            CHECK(res.count == solver.min_ops(v));
            CHECK(apply_sequence(res.ops, w).all_zero());
        }
    }
}

TEST_CASE("mixed solver beats or ties the type A count") {
    const SolveResult r = min_ops_mixed(BinaryWord::parse("10101"));
    CHECK(r.count == 2);
    REQUIRE(r.ops.ops.size() == 2);
    CHECK(r.ops.ops[0] == MaskOp::type_b(5, 1, 2));
    CHECK(r.ops.ops[1] == MaskOp::type_b(5, 2, 3));
    CHECK(apply_sequence(r.ops, BinaryWord::parse("10101")).all_zero());

    CHECK(min_ops_mixed(BinaryWord::parse("110")).count == 1);  // its own mask word
    CHECK(min_ops_mixed(BinaryWord::parse("1")).count == 1);
    CHECK(min_ops_mixed(BinaryWord::parse("10")).count == 2);
    CHECK(min_ops_mixed(BinaryWord::zeros(4)).count == 0);

    for (std::uint32_t len = 1; len <= 10; ++len) {
        const MaskSolver mixed(len, true);
        const MaskSolver a_only(len, false);
        for (std::uint32_t v = 1u << (len - 1); v < (1u << len); ++v) {
            CHECK(mixed.min_ops(v) <= a_only.min_ops(v));
            const SolveResult res = mixed.solve(uint_to_word(v, len));
            CHECK(res.count == mixed.min_ops(v));
            CHECK(apply_sequence(res.ops, uint_to_word(v, len)).all_zero());
        }
    }
}

TEST_CASE("solver guards") {
    CHECK_THROWS_AS(min_ops_mixed(BinaryWord::parse("0101")), std::invalid_argument);
    BinaryWord longword = BinaryWord::zeros(23);
    longword.bits[0] = 1;
    CHECK_THROWS_AS(min_ops_mixed(longword), std::length_error);
    CHECK_THROWS_AS(min_ops_mixed(longword, 27), std::length_error);
    BinaryWord mid = BinaryWord::zeros(14);
    mid.bits[0] = 1;
    CHECK(min_ops_mixed(mid, 14).count == 2);  // 1 0^13 needs A(1) then A(0)
    CHECK_THROWS_AS(MaskSolver(0, true), std::length_error);
    CHECK_THROWS_AS(MaskSolver(27, true), std::length_error);
    CHECK_THROWS_AS(uint_to_word(8, 3), std::invalid_argument);
}
