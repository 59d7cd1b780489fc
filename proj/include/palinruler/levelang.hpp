#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "palinruler/bitseq.hpp"
#include "palinruler/pallen.hpp"

namespace palinruler {

/// Deterministic finite automaton over {0,1}. Total: every state has both
/// transitions. States are dense indices 0..num_states-1.
struct Dfa {
    std::uint32_t num_states = 0;
    std::uint32_t initial = 0;
    std::vector<std::array<std::uint32_t, 2>> delta;  // delta[q][bit]
    std::vector<std::uint8_t> accepting;              // 0/1 per state

    bool accepts(const BinaryWord& w) const;
    bool accepts(std::uint64_t n) const;  // on the binary expansion, n >= 1

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

struct LevelSet {
    std::uint64_t epsilon = 0;
    std::uint64_t bound = 0;                // indices searched: 1..bound
    std::vector<std::uint64_t> members;     // ascending
};

/// Chain automaton accepting exactly the expansions with m runs: one state per
/// started block, alternating expected letters, plus a dead sink. m + 2 states.
Dfa dfa_for_run_count(std::uint32_t m);

LevelSet level_set(const std::function<std::uint64_t(std::uint64_t)>& f,
                   std::uint64_t epsilon, std::uint64_t n_max);
LevelSet level_set(const PalLengthTable& table, std::uint64_t epsilon,
                   std::uint64_t n_max);

/// Indices in 1..ls.bound where dfa acceptance of bin(n) disagrees with
/// membership in ls. Empty means the automaton matches the level set.
std::vector<std::uint64_t> verify_dfa(const Dfa& dfa, const LevelSet& ls);

/// Hopcroft-style minimization by partition refinement; unreachable states are
/// dropped first and the result is renumbered canonically (BFS from initial,
/// 0-edge before 1-edge), so equal languages give identical structures.
Dfa minimize(const Dfa& dfa);

std::uint32_t reachable_count(const Dfa& dfa);

/// Structural isomorphism of the reachable parts (paired BFS). Minimized
/// machines of the same language are isomorphic; unminimized ones may not be.
bool dfa_isomorphic(const Dfa& lhs, const Dfa& rhs);

struct LearnResult {
    std::optional<Dfa> dfa;       // set on success
    std::string diagnosis;        // set on failure
    std::uint64_t membership_queries = 0;
    std::uint32_t equivalence_rounds = 0;
};

/// Active automaton learning (observation table with closure/consistency
/// repair) against a membership oracle on integer indices. Equivalence is
/// approximated by sweeping 1..max_index ascending; the first disagreement is
/// the counterexample and all its prefixes join the table. Failure (state
/// budget, query budget, or out-of-domain words) is reported in diagnosis
/// rather than thrown.
LearnResult learn_level_set_dfa(const std::function<bool(std::uint64_t)>& membership,
                                std::uint64_t max_index, std::uint32_t max_states);

/// Canonical text form:
///   states <K> initial <q>
///   <q> <bit> <q'>        one line per (q, bit), sorted
///   accepting <q...>      sorted, possibly empty list
std::string dfa_serialize(const Dfa& dfa);

struct DfaParseError : std::runtime_error {
    explicit DfaParseError(std::size_t line, const std::string& what);
    std::size_t line;
};

Dfa dfa_parse(std::string_view text);

}  // namespace palinruler
