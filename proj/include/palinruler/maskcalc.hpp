#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "palinruler/bitseq.hpp"

namespace palinruler {

enum class MaskKind : std::uint8_t { A, B };

/// Flip masks over words of a fixed length L, applied by XOR.
///   A(t)   = 0^t 1^(L-t)          with 0 <= t <= L; t = L is the identity.
///   B(t,s) = 0^(t-1) 1^s 0 1^(L-t-s)  with t >= 1, s >= 2, t+s <= L.
struct MaskOp {
    MaskKind kind = MaskKind::A;
    std::uint32_t length = 0;
    std::uint32_t t = 0;
    std::uint32_t s = 0;  // type B only; 0 for type A

    static MaskOp type_a(std::uint32_t length, std::uint32_t t);
    static MaskOp type_b(std::uint32_t length, std::uint32_t t, std::uint32_t s);

    bool is_identity() const { return kind == MaskKind::A && t == length; }
    std::string str() const;  // "A(5,1)" or "B(5,1,4)", length first

    friend bool operator==(const MaskOp&, const MaskOp&) = default;
};

/// Masks of one common length, applied left to right.
struct OpSequence {
    std::vector<MaskOp> ops;
};

BinaryWord mask_word(const MaskOp& op);
BinaryWord apply_mask(const MaskOp& op, const BinaryWord& w);
BinaryWord apply_sequence(const OpSequence& seq, BinaryWord w);

/// B(t,s) = A(t-1) . A(t+s-1) . A(t+s) as a composition of type-A masks.
OpSequence compose_b_as_three_a(const MaskOp& op);

/// Signed change in value-run count caused by applying op to w.
/// Always within [-3, +3].
int run_delta(const BinaryWord& w, const MaskOp& op);

/// All non-identity masks of one length in canonical order:
/// type A by t ascending, then type B by (t, s) ascending.
std::vector<MaskOp> all_masks(std::uint32_t length, bool include_type_b);

inline constexpr std::uint32_t kSolverMaxLen = 22;   // default word-length cap
inline constexpr std::uint32_t kSolverHardCap = 26;  // 2^26 distance entries

struct SolveResult {
    std::uint32_t count = 0;
    OpSequence ops;
};

/// Exact minimum-operation solver for one word length. Distances to the
/// all-zero word are precomputed for every word of the length by breadth-first
/// search over XOR images, so queries are O(1) and witness sequences are
/// rebuilt greedily (smallest canonical mask first), without parent links.
class MaskSolver {
  public:
    MaskSolver(std::uint32_t length, bool include_type_b);

    std::uint32_t length() const { return length_; }
    bool mixed() const { return include_type_b_; }

    std::uint8_t min_ops(std::uint32_t word) const;  // word as integer, MSB at bit length-1
    std::uint8_t min_ops(const BinaryWord& w) const;
    SolveResult solve(const BinaryWord& w) const;

    const std::vector<std::uint8_t>& distances() const { return dist_; }

  private:
    std::uint32_t length_;
    bool include_type_b_;
    std::vector<MaskOp> masks_;
    std::vector<std::uint32_t> mask_bits_;
    std::vector<std::uint8_t> dist_;
};

/// Minimum type-A ops sending w to the all-zero word; the count equals the
/// number of value-runs of w. Constructive: merges the last run repeatedly.
/// Requires w to have a leading 1 or be all zero.
SolveResult min_ops_type_a(const BinaryWord& w);

/// Minimum ops over both mask types. Same preconditions plus size(w) <= max_len.
SolveResult min_ops_mixed(const BinaryWord& w, std::uint32_t max_len = kSolverMaxLen);

std::uint32_t word_to_uint(const BinaryWord& w);  // size <= kSolverHardCap
BinaryWord uint_to_word(std::uint32_t v, std::uint32_t length);

}  // namespace palinruler
