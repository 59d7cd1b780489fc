#include "palinruler/maskcalc.hpp"

#include <deque>
#include <stdexcept>
#include <string>

namespace palinruler {

namespace {

[[noreturn]] void bad_mask(const std::string& what) {
    throw std::invalid_argument("MaskOp: " + what);
}

// Mask as an integer, MSB of the word at bit length-1.
std::uint32_t mask_bits(const MaskOp& op) {
    const std::uint32_t L = op.length;
    if (op.kind == MaskKind::A)
        return (L == op.t) ? 0u : ((1u << (L - op.t)) - 1u);
    return ((1u << (L - op.t + 1)) - 1u) ^ (1u << (L - op.t - op.s));
}

}  // namespace

MaskOp MaskOp::type_a(std::uint32_t length, std::uint32_t t) {
    if (length == 0) bad_mask("type A needs length >= 1 (got L=0)");
    if (t > length)
        bad_mask("type A needs 0 <= t <= L (got t=" + std::to_string(t) +
                 ", L=" + std::to_string(length) + ")");
    return MaskOp{MaskKind::A, length, t, 0};
}

MaskOp MaskOp::type_b(std::uint32_t length, std::uint32_t t, std::uint32_t s) {
    if (t < 1) bad_mask("type B needs t >= 1 (got t=0)");
    if (s < 2)
        bad_mask("type B needs s >= 2 (got s=" + std::to_string(s) + ")");
    if (t + s > length)
        bad_mask("type B needs t + s <= L (got t=" + std::to_string(t) +
                 ", s=" + std::to_string(s) + ", L=" + std::to_string(length) + ")");
    return MaskOp{MaskKind::B, length, t, s};
}

std::string MaskOp::str() const {
    if (kind == MaskKind::A)
        return "A(" + std::to_string(length) + "," + std::to_string(t) + ")";
    return "B(" + std::to_string(length) + "," + std::to_string(t) + "," +
           std::to_string(s) + ")";
}

BinaryWord mask_word(const MaskOp& op) {
    BinaryWord w = BinaryWord::zeros(op.length);
    if (op.kind == MaskKind::A) {
        for (std::uint32_t p = op.t; p < op.length; ++p) w.bits[p] = 1;
    } else {
        for (std::uint32_t p = op.t - 1; p < op.length; ++p) w.bits[p] = 1;
        w.bits[op.t + op.s - 1] = 0;
    }
    return w;
}

BinaryWord apply_mask(const MaskOp& op, const BinaryWord& w) {
    if (w.size() != op.length)
        throw std::invalid_argument("apply_mask: word length " + std::to_string(w.size()) +
                                    " != mask length " + std::to_string(op.length));
    BinaryWord m = mask_word(op);
    for (std::size_t i = 0; i < m.size(); ++i) m.bits[i] ^= w.bits[i];
    return m;
}

BinaryWord apply_sequence(const OpSequence& seq, BinaryWord w) {
    for (const auto& op : seq.ops) w = apply_mask(op, w);
    return w;
}

OpSequence compose_b_as_three_a(const MaskOp& op) {
    if (op.kind != MaskKind::B)
        throw std::invalid_argument("compose_b_as_three_a: type B mask required");
    OpSequence seq;
    seq.ops = {MaskOp::type_a(op.length, op.t - 1),
               MaskOp::type_a(op.length, op.t + op.s - 1),
               MaskOp::type_a(op.length, op.t + op.s)};
    return seq;
}

int run_delta(const BinaryWord& w, const MaskOp& op) {
    return static_cast<int>(value_run_count(apply_mask(op, w))) -
           static_cast<int>(value_run_count(w));
}

std::vector<MaskOp> all_masks(std::uint32_t length, bool include_type_b) {
    std::vector<MaskOp> out;
    for (std::uint32_t t = 0; t < length; ++t) out.push_back(MaskOp::type_a(length, t));
    if (include_type_b)
        for (std::uint32_t t = 1; t + 2 <= length; ++t)
            for (std::uint32_t s = 2; t + s <= length; ++s)
                out.push_back(MaskOp::type_b(length, t, s));
    return out;
}

std::uint32_t word_to_uint(const BinaryWord& w) {
    if (w.size() > kSolverHardCap)
        throw std::length_error("word_to_uint: word longer than " +
                                std::to_string(kSolverHardCap));
    std::uint32_t v = 0;
    for (auto d : w.bits) v = (v << 1) | d;
    return v;
}

BinaryWord uint_to_word(std::uint32_t v, std::uint32_t length) {
    if (length > kSolverHardCap)
        throw std::length_error("uint_to_word: length above " + std::to_string(kSolverHardCap));
    if (length < 32 && (v >> length) != 0)
        throw std::invalid_argument("uint_to_word: value needs more bits than length");
    BinaryWord w = BinaryWord::zeros(length);
    for (std::uint32_t i = 0; i < length; ++i) w.bits[i] = (v >> (length - 1 - i)) & 1;
    return w;
}

MaskSolver::MaskSolver(std::uint32_t length, bool include_type_b)
    : length_(length), include_type_b_(include_type_b) {
    if (length == 0 || length > kSolverHardCap)
        throw std::length_error("MaskSolver: length must be in [1, " +
                                std::to_string(kSolverHardCap) + "], got " +
                                std::to_string(length));
    masks_ = all_masks(length, include_type_b);
    mask_bits_.reserve(masks_.size());
    for (const auto& m : masks_) mask_bits_.push_back(mask_bits(m));

    // XOR application makes distances symmetric, so one sweep from the
    // all-zero word covers every source word at once.
    dist_.assign(std::size_t{1} << length, 0xFF);
    dist_[0] = 0;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        const std::uint32_t x = queue.front();
        queue.pop_front();
        const std::uint8_t d = dist_[x];
        for (std::uint32_t mb : mask_bits_) {
            const std::uint32_t y = x ^ mb;
            if (dist_[y] == 0xFF) {
                dist_[y] = static_cast<std::uint8_t>(d + 1);
                queue.push_back(y);
            }
        }
    }
}

std::uint8_t MaskSolver::min_ops(std::uint32_t word) const {
    if (word >= dist_.size())
        throw std::invalid_argument("MaskSolver::min_ops: word out of range");
    return dist_[word];
}

std::uint8_t MaskSolver::min_ops(const BinaryWord& w) const {
    if (w.size() != length_)
        throw std::invalid_argument("MaskSolver::min_ops: word length mismatch");
    return dist_[word_to_uint(w)];
}

SolveResult MaskSolver::solve(const BinaryWord& w) const {
    SolveResult res;
    res.count = min_ops(w);
    std::uint32_t x = word_to_uint(w);
    // Greedy reconstruction: at each step take the canonically first mask that
    // decreases the distance. Deterministic, no parent table.
    while (x != 0) {
        const std::uint8_t d = dist_[x];
        bool stepped = false;
        for (std::size_t k = 0; k < masks_.size(); ++k) {
            const std::uint32_t y = x ^ mask_bits_[k];
            if (dist_[y] + 1 == d) {
                res.ops.ops.push_back(masks_[k]);
                x = y;
                stepped = true;
                break;
            }
        }
        if (!stepped)
            throw std::logic_error("MaskSolver::solve: no descent step");  // unreachable
    }
    return res;
}

SolveResult min_ops_type_a(const BinaryWord& w) {
    if (w.all_zero()) return {};
    if (!w.leading_one())
        throw std::invalid_argument("min_ops_type_a: word must start with 1 or be all zero");

    SolveResult res;
    res.count = value_run_count(w);
    // Merge the last run into its neighbor until one run is left, then clear it.
    BinaryWord cur = w;
    const std::uint32_t L = static_cast<std::uint32_t>(w.size());
    while (true) {
        std::uint32_t q = L;  // 1-based start of the last run
        while (q > 1 && cur.bits[q - 1] == cur.bits[q - 2]) --q;
        const MaskOp op = MaskOp::type_a(L, q - 1);
        cur = apply_mask(op, cur);
        res.ops.ops.push_back(op);
        if (q == 1) break;  // that run was the whole word
    }
    if (!cur.all_zero())
        throw std::logic_error("min_ops_type_a: construction failed");  // unreachable
    return res;
}

SolveResult min_ops_mixed(const BinaryWord& w, std::uint32_t max_len) {
    if (max_len > kSolverHardCap)
        throw std::length_error("min_ops_mixed: max_len above " +
                                std::to_string(kSolverHardCap));
    if (w.size() > max_len)
        throw std::length_error("min_ops_mixed: word length " + std::to_string(w.size()) +
                                " above limit " + std::to_string(max_len));
    if (w.all_zero()) return {};
    if (!w.leading_one())
        throw std::invalid_argument("min_ops_mixed: word must start with 1 or be all zero");
    return MaskSolver(static_cast<std::uint32_t>(w.size()), true).solve(w);
}

}  // namespace palinruler
