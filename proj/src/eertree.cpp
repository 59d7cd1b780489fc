#include "palinruler/eertree.hpp"

#include <algorithm>
#include <limits>

namespace palinruler {

namespace {
constexpr std::uint32_t kRootMinus1 = 0;  // imaginary palindrome of length -1
constexpr std::uint32_t kRoot0 = 1;       // empty palindrome
constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() - 1;
}  // namespace

Eertree::Eertree() {
    nodes_.resize(2);
    nodes_[kRootMinus1] = {-1, kRootMinus1, kRootMinus1, 0, kInf, {}};
    nodes_[kRoot0] = {0, kRootMinus1, kRootMinus1, 0, kInf, {}};
    dp_.push_back(0);
    last_ = kRoot0;
}

std::uint32_t Eertree::get_next(std::uint32_t node, std::uint32_t letter) const {
    for (const auto& [c, to] : nodes_[node].next)
        if (c == letter) return to;
    return 0;  // kRootMinus1 doubles as "absent": never a real transition target
}

void Eertree::set_next(std::uint32_t node, std::uint32_t letter, std::uint32_t to) {
    nodes_[node].next.emplace_back(letter, to);
}

// Longest suffix palindrome of the current word that letter can extend.
std::uint32_t Eertree::find_ext(std::uint32_t node, std::uint32_t letter) const {
    const auto pos = static_cast<std::int64_t>(word_.size()) - 1;
    while (true) {
        const std::int64_t mirror = pos - nodes_[node].len - 1;
        if (mirror >= 0 && word_[static_cast<std::size_t>(mirror)] == letter) return node;
        node = nodes_[node].link;
    }
}

void Eertree::push(std::uint32_t letter) {
    word_.push_back(letter);
    const std::uint32_t ext = find_ext(last_, letter);
    std::uint32_t cur = get_next(ext, letter);
    if (cur == kRootMinus1) {
        cur = static_cast<std::uint32_t>(nodes_.size());
        Node node;
        node.len = nodes_[ext].len + 2;
        if (node.len == 1) {
            node.link = kRoot0;
        } else {
            node.link = get_next(find_ext(nodes_[ext].link, letter), letter);
        }
        node.diff = node.len - nodes_[node.link].len;
        node.slink = node.diff == nodes_[node.link].diff ? nodes_[node.link].slink
                                                         : node.link;
        node.g = kInf;
        nodes_.push_back(std::move(node));
        set_next(ext, letter, cur);
    }
    last_ = cur;

    // Series-link sweep: each arithmetic progression of suffix-palindrome
    // lengths contributes its cached best dp value.
    const std::size_t n = word_.size();
    std::uint32_t best = kInf;
    for (std::uint32_t v = last_; nodes_[v].len > 0; v = nodes_[v].slink) {
        Node& node = nodes_[v];
        const std::size_t anchor =
            n - static_cast<std::size_t>(nodes_[node.slink].len + node.diff);
        node.g = dp_[anchor];
        if (node.diff == nodes_[node.link].diff)
            node.g = std::min(node.g, nodes_[node.link].g);
        best = std::min(best, node.g + 1);
    }
    dp_.push_back(best);
}

std::vector<std::uint32_t> eertree_pal_lengths(std::span<const std::uint32_t> word) {
    Eertree t;
    for (auto letter : word) t.push(letter);
    return t.pal_len();
}

}  // namespace palinruler
