#include "palinruler/pallen.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>

#include "palinruler/bitseq.hpp"
#include "palinruler/eertree.hpp"
#include "palinruler/palfactor.hpp"

namespace palinruler {

namespace {

std::uint16_t narrow16(std::uint64_t v, const char* who) {
    if (v > 0xFFFF)
        throw std::overflow_error(std::string(who) + ": value exceeds 16-bit table storage");
    return static_cast<std::uint16_t>(v);
}

}  // namespace

std::uint64_t oracle_bound() {
    static const std::uint64_t bound = [] {
        if (const char* env = std::getenv("PALINRULER_ORACLE_BOUND")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v >= 1) return static_cast<std::uint64_t>(v);
            throw std::invalid_argument("PALINRULER_ORACLE_BOUND: not a positive integer");
        }
        return std::uint64_t{1} << 17;
    }();
    return bound;
}

PalLengthTable pal_length_bruteforce(std::span<const std::uint32_t> word,
                                     PalOracle method, std::string seq_id) {
    const std::uint64_t n = word.size();
    if (n > oracle_bound())
        throw std::length_error("pal_length_bruteforce: word length " + std::to_string(n) +
                                " above oracle bound " + std::to_string(oracle_bound()) +
                                " (override with PALINRULER_ORACLE_BOUND)");
    PalLengthTable table;
    table.seq_id = std::move(seq_id);
    table.n_max = n;
    table.values.assign(n + 1, 0);

    if (method == PalOracle::Eertree) {
        const auto dp = eertree_pal_lengths(word);
        for (std::uint64_t i = 1; i <= n; ++i)
            table.values[i] = narrow16(dp[i], "pal_length_bruteforce");
        return table;
    }

    // Quadratic scan: maintain one row of "word[i..m] palindromic" flags and
    // take the minimum over palindromic suffixes, directly from the
    // characterization of prefix palindromic length.
    std::vector<std::uint8_t> prev(n + 2, 0), cur(n + 2, 0);
    for (std::uint64_t m = 1; m <= n; ++m) {
        std::uint32_t best = table.values[m - 1];  // singleton suffix
        cur[m] = 1;
        for (std::uint64_t i = m - 1; i >= 1; --i) {
            cur[i] = word[i - 1] == word[m - 1] && (i + 1 > m - 1 || prev[i + 1]);
            if (cur[i]) best = std::min<std::uint32_t>(best, table.values[i - 1]);
        }
        table.values[m] = narrow16(best + 1u, "pal_length_bruteforce");
        std::swap(prev, cur);
    }
    return table;
}

PalLengthTable pal_length_a(std::uint64_t n_max) {
    if (n_max == 0) throw std::invalid_argument("pal_length_a: need n_max >= 1");
    PalLengthTable table;
    table.seq_id = "a";
    table.n_max = n_max;
    table.values.assign(n_max + 1, 0);
    for (std::uint64_t n = 1; n <= n_max; ++n)
        table.values[n] = static_cast<std::uint16_t>(run_count(n));
    return table;
}

PalLengthTable pal_length_b(std::uint64_t n_max) {
    if (n_max == 0) throw std::invalid_argument("pal_length_b: need n_max >= 1");
    PalLengthTable table;
    table.seq_id = "b";
    table.n_max = n_max;
    table.values.assign(n_max + 1, 0);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::uint32_t best = 0xFFFFFFFF;
        visit_pal_suffix_starts_b(n, [&](std::uint64_t start) {
            best = std::min<std::uint32_t>(best, table.values[start - 1]);
        });
        table.values[n] = narrow16(best + 1u, "pal_length_b");
    }
    return table;
}

BoundsReport check_bounds_b(const PalLengthTable& b_table) {
    BoundsReport rep;
    rep.n_max = b_table.n_max;
    std::uint16_t running = 0;
    for (std::uint64_t n = 1; n <= b_table.n_max; ++n) {
        const std::uint16_t v = b_table.values[n];
        const std::uint32_t c = run_count(n);
        if (v < c / 3 || v > c) rep.violations.push_back(n);
        ++rep.histogram[v];
        if (v > rep.max_value) rep.max_value = v;
        if (v > running) {
            running = v;
            rep.records.emplace_back(n, v);
        }
    }
    for (std::uint64_t n = 1; n <= b_table.n_max; ++n)
        if (b_table.values[n] == rep.max_value) rep.argmax.push_back(n);
    return rep;
}

BoundsReport check_bounds_b(std::uint64_t n_max) {
    return check_bounds_b(pal_length_b(n_max));
}

MixedMinReport compare_mixed_min(std::uint64_t n_max, std::uint32_t max_len) {
    if (n_max == 0) throw std::invalid_argument("compare_mixed_min: need n_max >= 1");
    if (max_len > kSolverHardCap)
        throw std::length_error("compare_mixed_min: max_len above " +
                                std::to_string(kSolverHardCap));
    if (std::bit_width(n_max) > max_len)
        throw std::length_error("compare_mixed_min: n_max needs " +
                                std::to_string(std::bit_width(n_max)) +
                                " bits, above max_len " + std::to_string(max_len));

    MixedMinReport rep;
    rep.n_max = n_max;
    rep.max_len = max_len;
    const PalLengthTable b = pal_length_b(n_max);

    std::vector<std::unique_ptr<MaskSolver>> solvers(max_len + 1);
    rep.triples.reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto k = static_cast<std::uint32_t>(std::bit_width(n));
        if (!solvers[k]) solvers[k] = std::make_unique<MaskSolver>(k, true);
        const MaskSolver& solver = *solvers[k];

        const auto word = static_cast<std::uint32_t>(n);
        const std::uint8_t d = solver.min_ops(word);
        const auto pl = b.values[n];
        rep.triples.push_back({n, pl, d});
        ++rep.checked;
        if (pl != d) rep.mismatches.push_back(n);
        ++rep.diff_histogram[static_cast<int>(pl) - static_cast<int>(d)];

        const SolveResult witness = solver.solve(uint_to_word(word, k));
        if (witness.count != d ||
            !apply_sequence(witness.ops, uint_to_word(word, k)).all_zero())
            ++rep.replay_failures;
    }
    return rep;
}

RunBoundReport check_run_bound(std::uint64_t n_max) {
    if (n_max == 0) throw std::invalid_argument("check_run_bound: need n_max >= 1");
    RunBoundReport rep;
    rep.n_max = n_max;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const std::uint32_t c = run_count(n);
        const auto cap = static_cast<std::uint32_t>(std::bit_width(n));  // floor(log2 n) + 1
        if (c > cap) rep.violations.push_back(n);
        if (c == cap) rep.tight.push_back(n);
        if (c + 1 == cap) ++rep.one_short_count;
    }
    for (std::uint64_t n = 1; n <= n_max; n = 4 * n + 1)
        rep.geometric_sums.emplace_back(n, run_count(n));
    return rep;
}

}  // namespace palinruler
