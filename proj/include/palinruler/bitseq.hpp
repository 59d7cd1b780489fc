#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace palinruler {

/// Fixed-length binary word, most significant bit first.
/// Binary expansions of integers, masks and sequence prefixes all use it.
struct BinaryWord {
    std::vector<std::uint8_t> bits;  // each digit 0 or 1, MSB first

    BinaryWord() = default;
    explicit BinaryWord(std::vector<std::uint8_t> b);

    static BinaryWord zeros(std::size_t n);
    static BinaryWord parse(std::string_view s);  // e.g. "10001"

    std::size_t size() const { return bits.size(); }
    bool empty() const { return bits.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits[i]; }  // 0-based
    bool all_zero() const;
    bool leading_one() const { return !bits.empty() && bits.front() == 1; }
    std::string str() const;

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
};

/// Run-length view of a word: first letter plus the maximal-block lengths in order.
struct RunEncoding {
    std::uint8_t first_bit = 0;
    std::vector<std::uint32_t> run_lengths;

    friend bool operator==(const RunEncoding&, const RunEncoding&) = default;
};

/// a[n]: largest e with 2^e dividing n. Rejects n = 0.
std::uint32_t ruler(std::uint64_t n);

/// b[n] = ruler(n) mod 2. Rejects n = 0.
std::uint8_t period_doubling(std::uint64_t n);

/// c[n]: number of maximal constant blocks in the binary expansion of n. Rejects n = 0.
std::uint32_t run_count(std::uint64_t n);

BinaryWord to_binary(std::uint64_t n);           // n >= 1; leading digit is 1
std::uint64_t from_binary(const BinaryWord& w);  // leading zeros allowed

RunEncoding run_encode(const BinaryWord& w);  // w nonempty

/// Runs of the value the word denotes: leading zeros are ignored and the
/// all-zero word counts 0. Distinct from run_encode, which counts raw blocks.
std::uint32_t value_run_count(const BinaryWord& w);

enum class SeqId { Ruler, PeriodDoubling, RunCount };

std::vector<std::uint32_t> generate_prefix(SeqId id, std::uint64_t n);  // seq(1..n)

}  // namespace palinruler
