#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "palinruler/maskcalc.hpp"

namespace palinruler {

/// Prefix palindromic lengths of one sequence: values[n] is the minimal number
/// of palindromic blocks covering the first n letters; values[0] = 0.
/// Storage is 16-bit; computations that would exceed it are rejected.
struct PalLengthTable {
    std::string seq_id;
    std::uint64_t n_max = 0;
    std::vector<std::uint16_t> values;  // size n_max + 1
};

enum class PalOracle { QuadraticScan, Eertree };

/// Brute-force cap for oracle computations; PALINRULER_ORACLE_BOUND overrides
/// the default of 2^17.
std::uint64_t oracle_bound();

/// Sequence-agnostic reference computation over an explicit word.
/// QuadraticScan: O(N^2) incremental palindromicity rows, O(N) memory.
/// Eertree: O(N log N) palindromic tree with series links.
PalLengthTable pal_length_bruteforce(std::span<const std::uint32_t> word,
                                     PalOracle method = PalOracle::QuadraticScan,
                                     std::string seq_id = "word");

/// Palindromic length of ruler prefixes: equals the binary run count, O(N).
PalLengthTable pal_length_a(std::uint64_t n_max);

/// Palindromic length of period-doubling prefixes via the closed-form suffix
/// enumeration; O(N log N), no quadratic scan.
PalLengthTable pal_length_b(std::uint64_t n_max);

struct BoundsReport {
    std::uint64_t n_max = 0;
    std::uint16_t max_value = 0;
    std::vector<std::uint64_t> argmax;                        // n attaining max_value
    std::vector<std::uint64_t> violations;                    // outside [floor(c/3), c]
    std::map<std::uint16_t, std::uint64_t> histogram;         // value -> count
    std::vector<std::pair<std::uint64_t, std::uint16_t>> records;  // running-max steps
};

/// Sandwich check floor(c[n]/3) <= pl_b[n] <= c[n] for 1 <= n <= table.n_max.
BoundsReport check_bounds_b(const PalLengthTable& b_table);
BoundsReport check_bounds_b(std::uint64_t n_max);

struct MixedMinEntry {
    std::uint64_t n = 0;
    std::uint16_t pal_len = 0;   // pl_b[n]
    std::uint8_t mask_min = 0;   // exact mixed-mask minimum for bin(n)
};

struct MixedMinReport {
    std::uint64_t n_max = 0;
    std::uint32_t max_len = 0;
    std::uint64_t checked = 0;
    std::uint64_t replay_failures = 0;      // witness sequences that failed replay
    std::vector<MixedMinEntry> triples;     // every n in 1..n_max
    std::vector<std::uint64_t> mismatches;  // n with pal_len != mask_min
    std::map<int, std::uint64_t> diff_histogram;  // pal_len - mask_min -> count
};

/// Side-by-side comparison of pl_b[n] with the exact mixed-mask minimum of
/// bin(n). The two agree for most but not all n; mismatches are reported, not
/// treated as errors. Every witness sequence is replayed before counting.
MixedMinReport compare_mixed_min(std::uint64_t n_max,
                                 std::uint32_t max_len = kSolverMaxLen);

struct RunBoundReport {
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> violations;   // c[n] > floor(log2 n) + 1
    std::vector<std::uint64_t> tight;        // c[n] == floor(log2 n) + 1
    std::uint64_t one_short_count = 0;       // c[n] == floor(log2 n)
    std::vector<std::pair<std::uint64_t, std::uint32_t>> geometric_sums;  // (n, c[n]) for n = 1+4+...+4^k
};

/// Growth of the run count: c[n] <= floor(log2 n) + 1, tight exactly at the
/// alternating expansions 1010...; the sums of powers of 4 realize every odd
/// value 2k+1.
RunBoundReport check_run_bound(std::uint64_t n_max);

}  // namespace palinruler
