#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

#include "palinruler/bitseq.hpp"
#include "palinruler/palfactor.hpp"

using namespace palinruler;

namespace {

// Reference table pal[i][j] by direct comparison, 1-based, O(N^2) memory.
std::vector<std::vector<bool>> brute_pal_table(const std::vector<std::uint32_t>& word) {
    const std::size_t n = word.size();
    std::vector<std::vector<bool>> pal(n + 1, std::vector<bool>(n + 1, false));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j)
            pal[i][j] = brute_pal_check(word, i, j);
    return pal;
}

}  // namespace

TEST_CASE("brute palindrome check") {
    const std::vector<std::uint32_t> w{1, 2, 1, 1};
    CHECK(brute_pal_check(w, 1, 3));
    CHECK(!brute_pal_check(w, 1, 2));
    CHECK(brute_pal_check(w, 3, 4));
    CHECK(brute_pal_check(w, 2, 2));
    CHECK_THROWS_AS(brute_pal_check(w, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(brute_pal_check(w, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(brute_pal_check(w, 3, 2), std::invalid_argument);
}

TEST_CASE("closed form for ruler factors matches brute force") {
    CHECK(is_pal_factor_a(1, 3));    // 0 1 0
    CHECK(!is_pal_factor_a(2, 4));   // 1 0 2: same ends would be needed
    CHECK(!is_pal_factor_a(1, 2));   // even length is never palindromic in a
    CHECK(is_pal_factor_a(15, 17));  // centered at 16

    const auto word = generate_prefix(SeqId::Ruler, 512);
    const auto pal = brute_pal_table(word);
    for (std::uint64_t i = 1; i <= 512; ++i)
        for (std::uint64_t j = i; j <= 512; ++j)
            CHECK(is_pal_factor_a(i, j) == pal[i][j]);
}

TEST_CASE("closed form for period-doubling factors matches brute force") {
    const auto word = generate_prefix(SeqId::PeriodDoubling, 512);
    const auto pal = brute_pal_table(word);
    for (std::uint64_t i = 1; i <= 512; ++i)
        for (std::uint64_t j = i; j <= 512; ++j)
            CHECK(is_pal_factor_b(i, j) == pal[i][j]);
}

TEST_CASE("the off-center families need the valuation parity side condition") {
    // [3,7] has the right coarse shape but odd valuation at the anchor.
    CHECK(!is_pal_factor_b(3, 7));
    CHECK(is_pal_factor_b(4, 5));
    CHECK(is_pal_factor_b(16, 17));
    CHECK(is_pal_factor_b(11, 17));
    CHECK(!is_pal_factor_b(1, 2));
}

TEST_CASE("classification agrees with the decision and reconstructs the factor") {
    for (std::uint64_t j = 1; j <= 512; ++j)
        for (std::uint64_t i = 1; i <= j; ++i) {
            const auto f = classify_pal_factor_b(i, j);
            CHECK(f.has_value() == is_pal_factor_b(i, j));
            if (!f) continue;
            CHECK(f->i == i);
            CHECK(f->j == j);
            CHECK(f->o % 2 == 1);
            switch (f->form) {
                case PalForm::Singleton:
                    CHECK(i == j);
                    CHECK(f->x == 0);
                    CHECK((f->o << f->v) == i);
                    break;
                case PalForm::ACenter:
                    CHECK(f->x < (std::uint64_t{1} << f->v));
                    CHECK((f->o << f->v) - f->x == i);
                    CHECK((f->o << f->v) + f->x == j);
                    break;
                case PalForm::BRight:
                    CHECK(f->v > f->v2);
                    CHECK((f->v - f->v2) % 2 == 0);
                    CHECK(f->x < (std::uint64_t{1} << f->v2));
                    CHECK((f->o << f->v) - f->x == i);
                    CHECK((f->o << f->v) + (std::uint64_t{1} << f->v2) + f->x == j);
                    break;
                case PalForm::BLeft:
                    CHECK(f->v > f->v2);
                    CHECK((f->v - f->v2) % 2 == 0);
                    CHECK(f->x < (std::uint64_t{1} << f->v2));
                    CHECK((f->o << f->v) - (std::uint64_t{1} << f->v2) - f->x == i);
                    CHECK((f->o << f->v) + f->x == j);
                    break;
            }
        }
}

TEST_CASE("palindromic suffixes of the ruler prefix") {
    CHECK(pal_suffixes_a(17) == std::vector<std::uint64_t>{15, 17});
    CHECK(pal_suffixes_a(1) == std::vector<std::uint64_t>{1});
    CHECK_THROWS_AS(pal_suffixes_a(0), std::invalid_argument);

    const auto word = generate_prefix(SeqId::Ruler, 1024);
    for (std::uint64_t n = 1; n <= 1024; ++n) {
        std::vector<std::uint64_t> brute;
        for (std::uint64_t i = 1; i <= n; ++i)
            if (brute_pal_check(word, i, n)) brute.push_back(i);
        const auto fast = pal_suffixes_a(n);
        CHECK(fast == brute);
        CHECK(fast.size() == static_cast<std::size_t>(std::popcount(n)));
        CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
}

TEST_CASE("palindromic suffixes of the period-doubling prefix") {
    const auto sfx17 = pal_suffixes_b(17);
    REQUIRE(sfx17.size() == 4);
    CHECK(sfx17[0].i == 11);
    CHECK(sfx17[0].form == PalForm::BLeft);
    CHECK(sfx17[1].i == 15);
    CHECK(sfx17[1].form == PalForm::ACenter);
    CHECK(sfx17[2].i == 16);
    CHECK(sfx17[2].form == PalForm::BRight);
    CHECK(sfx17[3].i == 17);
    CHECK(sfx17[3].form == PalForm::Singleton);

    const auto word = generate_prefix(SeqId::PeriodDoubling, 1024);
    for (std::uint64_t n = 1; n <= 1024; ++n) {
        std::vector<std::uint64_t> brute;
        for (std::uint64_t i = 1; i <= n; ++i)
            if (brute_pal_check(word, i, n)) brute.push_back(i);
        const auto fast = pal_suffixes_b(n);
        std::vector<std::uint64_t> starts;
        for (const auto& f : fast) {
            CHECK(f.j == n);
            starts.push_back(f.i);
        }
        CHECK(starts == brute);
        // The centered starts embed the ruler suffix starts.
        const auto a_starts = pal_suffixes_a(n);
        CHECK(std::includes(starts.begin(), starts.end(), a_starts.begin(), a_starts.end()));
    }
}

TEST_CASE("suffix factors map to masks sending bin(n) to bin(i-1)") {
    const auto sfx = pal_suffixes_b(17);
    CHECK(suffix_to_mask(17, sfx[0]) == MaskOp::type_b(5, 1, 2));  // [11,17]
    CHECK(suffix_to_mask(17, sfx[1]) == MaskOp::type_a(5, 0));     // [15,17]
    CHECK(suffix_to_mask(17, sfx[2]) == MaskOp::type_b(5, 1, 4));  // [16,17]
    CHECK(suffix_to_mask(17, sfx[3]) == MaskOp::type_a(5, 4));     // [17,17]

    for (std::uint64_t n = 1; n <= 2048; ++n) {
        const BinaryWord wn = to_binary(n);
        for (const auto& f : pal_suffixes_b(n)) {
            const MaskOp op = suffix_to_mask(n, f);
            CHECK(op.length == wn.size());
            const BinaryWord image = apply_mask(op, wn);
            CHECK(from_binary(image) == f.i - 1);
            CHECK(!op.is_identity());
        }
    }

    PalFactor wrong;
    wrong.i = 2;
    wrong.j = 17;
    CHECK_THROWS_AS(suffix_to_mask(17, wrong), std::invalid_argument);
    PalFactor elsewhere = pal_suffixes_b(16)[0];
    CHECK_THROWS_AS(suffix_to_mask(17, elsewhere), std::invalid_argument);
    // Palindromic factor with inconsistent witness parameters.
    PalFactor garbled = sfx[1];
    garbled.v += 1;
    CHECK_THROWS_AS(suffix_to_mask(17, garbled), std::invalid_argument);
}

TEST_CASE("factor enumeration matches the brute set") {
    for (const PalSeq seq : {PalSeq::A, PalSeq::B}) {
        const auto word = generate_prefix(
            seq == PalSeq::A ? SeqId::Ruler : SeqId::PeriodDoubling, 256);
        std::set<std::pair<std::uint64_t, std::uint64_t>> brute;
        for (std::uint64_t i = 1; i <= 256; ++i)
            for (std::uint64_t j = i; j <= 256; ++j)
                if (brute_pal_check(word, i, j)) brute.emplace(i, j);

        const auto factors = enumerate_pal_factors(seq, 256);
        CHECK(factors.size() == brute.size());
        std::set<std::pair<std::uint64_t, std::uint64_t>> got;
        for (const auto& f : factors) got.emplace(f.i, f.j);
        CHECK(got == brute);
        const bool sorted = std::is_sorted(
            factors.begin(), factors.end(), [](const PalFactor& p, const PalFactor& q) {
                return p.i != q.i ? p.i < q.i : p.j < q.j;
            });
        CHECK(sorted);
    }
}
