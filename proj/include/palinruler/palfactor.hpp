#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "palinruler/bitseq.hpp"
#include "palinruler/maskcalc.hpp"

namespace palinruler {

enum class PalSeq : std::uint8_t { A, B };

/// Shape of a palindromic factor of the period-doubling sequence.
///   Singleton:  i == j.
///   ACenter:    [o*2^v - x, o*2^v + x]            o odd, v >= 0, 0 <= x < 2^v
///   BRight:     [o*2^v1 - x, o*2^v1 + 2^v2 + x]   o odd, v1 > v2 >= 0,
///   BLeft:      [o*2^v1 - 2^v2 - x, o*2^v1 + x]   v1 == v2 (mod 2), 0 <= x < 2^v2
/// The B families additionally need the 2-adic valuation split: the matching
/// parity of v1 and v2 is what makes the mirrored block pairs agree.
enum class PalForm : std::uint8_t { Singleton, ACenter, BRight, BLeft };

struct PalFactor {
    std::uint64_t i = 0;  // 1-based, inclusive
    std::uint64_t j = 0;
    PalForm form = PalForm::Singleton;
    std::uint64_t o = 0;  // odd anchor
    std::uint32_t v = 0;  // ACenter/Singleton: v; BRight/BLeft: v1
    std::uint32_t v2 = 0; // BRight/BLeft only
    std::uint64_t x = 0;

    friend bool operator==(const PalFactor&, const PalFactor&) = default;
};

const char* pal_form_name(PalForm f);

/// a[i..j] palindromic?  Closed form: i + j even and (j-i)/2 < 2^ruler((i+j)/2).
bool is_pal_factor_a(std::uint64_t i, std::uint64_t j);

/// b[i..j] palindromic?  O(1), no sequence materialization.
bool is_pal_factor_b(std::uint64_t i, std::uint64_t j);

/// Classify b[i..j]: the witnessed form, or nullopt when not palindromic.
std::optional<PalFactor> classify_pal_factor_b(std::uint64_t i, std::uint64_t j);

/// Start indices i of all palindromic suffixes a[i..n], ascending. Size = popcount(n).
std::vector<std::uint64_t> pal_suffixes_a(std::uint64_t n);

/// All palindromic suffixes b[i..n] with full classification, ascending by start.
std::vector<PalFactor> pal_suffixes_b(std::uint64_t n);

/// The flip mask over words of length bitlen(n) sending bin(n) to bin(i-1)
/// (zero-padded), for a palindromic suffix f of b ending at n. ACenter forms
/// map to type A masks, B forms to type B masks; the round trip is verified.
MaskOp suffix_to_mask(std::uint64_t n, const PalFactor& f);

/// Reference check by direct two-pointer comparison; 1-based indices into word.
bool brute_pal_check(std::span<const std::uint32_t> word, std::uint64_t i, std::uint64_t j);

/// Every palindromic factor [i,j] with j <= n_max, sorted by (i, j).
/// For seq a the factors are reported in ACenter/Singleton parameterization.
std::vector<PalFactor> enumerate_pal_factors(PalSeq seq, std::uint64_t n_max);

/// Visits the start indices of palindromic suffixes of b ending at n, in no
/// particular order. Shared by pal_suffixes_b and the pal-length recurrences.
template <class Fn>
void visit_pal_suffix_starts_b(std::uint64_t n, Fn&& fn) {
    // Centered family: one suffix per set bit of n.
    for (std::uint64_t rest = n; rest != 0;) {
        const int v = 63 - std::countl_zero(rest);
        const std::uint64_t bit = std::uint64_t{1} << v;
        rest ^= bit;
        const std::uint64_t m = n & ~(bit - 1);  // clear bits below v
        fn(2 * m - n);
    }
    // Off-center family: anchored at the unique even coarse index with even
    // 2-adic valuation next to n >> v2.
    for (std::uint32_t v2 = 0;; ++v2) {
        const std::uint64_t beta = n >> v2;
        if (beta < 2) break;
        const std::uint64_t even = (beta & 1) ? beta - 1 : beta;
        if (even == 0 || (std::countr_zero(even) & 1)) continue;
        const std::uint64_t anchor = beta << v2;
        const std::uint64_t start = 2 * anchor - (std::uint64_t{1} << v2) - n;
        if (start >= 1) fn(start);
    }
}

}  // namespace palinruler
