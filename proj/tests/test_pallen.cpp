#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "palinruler/bitseq.hpp"
#include "palinruler/pallen.hpp"

using namespace palinruler;

namespace {

// The published opening of the period-doubling sequence, used verbatim as an
// oracle input so the fast tables are tied to the listed letters themselves.
const std::vector<std::uint32_t> kB30{0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0,
                                      0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1};

std::vector<std::uint32_t> lcg_word(std::size_t n, std::uint32_t alphabet,
                                    std::uint32_t seed) {
    std::vector<std::uint32_t> w(n);
    std::uint32_t s = seed;
    for (auto& x : w) {
        s = s * 1664525 + 1013904223;
        x = (s >> 16) % alphabet;
    }
    return w;
}

}  // namespace

TEST_CASE("quadratic oracle on tiny hand-checked words") {
    const std::vector<std::uint32_t> aba{0, 1, 0};
    const auto t = pal_length_bruteforce(aba);
    CHECK(t.values == std::vector<std::uint16_t>{0, 1, 2, 1});

    const auto t6 = pal_length_bruteforce(std::vector<std::uint32_t>{0, 1, 0, 0, 0, 1});
    CHECK(t6.values == std::vector<std::uint16_t>{0, 1, 2, 1, 2, 2, 2});
}

TEST_CASE("published letters reproduce the table openings") {
    const auto direct = pal_length_bruteforce(kB30);
    const auto table = pal_length_b(30);
    CHECK(direct.values == table.values);
    CHECK(table.values[4] == 2);
    CHECK(table.values[5] == 2);
    CHECK(table.values[7] == 1);
    CHECK(table.values[11] == 3);
    CHECK(table.values[17] == 2);
}

TEST_CASE("the ruler table is the run count") {
    const auto table = pal_length_a(4096);
    for (std::uint64_t n = 1; n <= 4096; ++n) CHECK(table.values[n] == run_count(n));

    const auto word = generate_prefix(SeqId::Ruler, 1024);
    const auto direct = pal_length_bruteforce(word);
    for (std::uint64_t n = 1; n <= 1024; ++n) CHECK(direct.values[n] == table.values[n]);
}

TEST_CASE("closed-form period-doubling table matches the quadratic oracle") {
    const std::uint64_t n = 1 << 12;
    const auto word = generate_prefix(SeqId::PeriodDoubling, n);
    const auto direct = pal_length_bruteforce(word, PalOracle::QuadraticScan, "b");
    const auto table = pal_length_b(n);
    CHECK(direct.values == table.values);
}

TEST_CASE("the two oracles agree with each other") {
    const std::uint64_t n = 1 << 12;
    for (const SeqId id : {SeqId::Ruler, SeqId::PeriodDoubling}) {
        const auto word = generate_prefix(id, n);
        CHECK(pal_length_bruteforce(word, PalOracle::QuadraticScan).values ==
              pal_length_bruteforce(word, PalOracle::Eertree).values);
    }
    // Arbitrary alphabets, fixed seeds.
    for (std::uint32_t alphabet : {2u, 3u, 5u}) {
        const auto word = lcg_word(1500, alphabet, 7u * alphabet + 1);
        CHECK(pal_length_bruteforce(word, PalOracle::QuadraticScan).values ==
              pal_length_bruteforce(word, PalOracle::Eertree).values);
    }
}

TEST_CASE("oracle bound guards the quadratic scan") {
    CHECK(oracle_bound() == (std::uint64_t{1} << 17));  // default, no env override
    std::vector<std::uint32_t> too_long(oracle_bound() + 1, 0);
    CHECK_THROWS_AS(pal_length_bruteforce(too_long), std::length_error);
}

TEST_CASE("sandwich bounds hold and the report is coherent") {
    const auto table = pal_length_b(1 << 12);
    const BoundsReport rep = check_bounds_b(table);
    CHECK(rep.violations.empty());
    CHECK(rep.n_max == (1 << 12));
    CHECK(rep.max_value >= 3);
    // Histogram covers every index once.
    std::uint64_t total = 0;
    for (const auto& [value, count] : rep.histogram) total += count;
    CHECK(total == rep.n_max);
    // Records are strictly increasing in both coordinates and end at the max.
    for (std::size_t k = 1; k < rep.records.size(); ++k) {
        CHECK(rep.records[k].first > rep.records[k - 1].first);
        CHECK(rep.records[k].second > rep.records[k - 1].second);
    }
    CHECK(rep.records.back().second == rep.max_value);
    for (auto n : rep.argmax) CHECK(table.values[n] == rep.max_value);
    CHECK(!rep.argmax.empty());
}

TEST_CASE("mixed-mask comparison report") {
    const MixedMinReport rep = compare_mixed_min(512);
    CHECK(rep.checked == 512);
    CHECK(rep.triples.size() == 512);
    CHECK(rep.replay_failures == 0);

    // The palindromic length can exceed the mask minimum: n = 11 is the
    // smallest index where the DP needs three blocks but two masks suffice.
    CHECK(rep.triples[10].n == 11);
    CHECK(rep.triples[10].pal_len == 3);
    CHECK(rep.triples[10].mask_min == 2);
    CHECK(std::find(rep.mismatches.begin(), rep.mismatches.end(), 11) !=
          rep.mismatches.end());

    // The mask minimum never exceeds the palindromic length.
    for (const auto& [diff, count] : rep.diff_histogram) CHECK(diff >= 0);
    std::uint64_t hist_total = 0;
    for (const auto& [diff, count] : rep.diff_histogram) hist_total += count;
    CHECK(hist_total == rep.checked);

    CHECK_THROWS_AS(compare_mixed_min(1 << 23), std::length_error);
}

TEST_CASE("run-count growth bound") {
    const RunBoundReport rep = check_run_bound(4096);
    CHECK(rep.violations.empty());
    // Tight exactly at the alternating expansions 1, 10, 101, 1010, ...
    CHECK(rep.tight == std::vector<std::uint64_t>{1, 2, 5, 10, 21, 42, 85, 170, 341,
                                                  682, 1365, 2730});
    // Sums of powers of four hit every odd run count.
    REQUIRE(rep.geometric_sums.size() == 6);
    for (std::size_t k = 0; k < rep.geometric_sums.size(); ++k) {
        CHECK(rep.geometric_sums[k].second == 2 * k + 1);
    }
    CHECK(rep.geometric_sums[5].first == 1365);
}
