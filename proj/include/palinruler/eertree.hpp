#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace palinruler {

/// Palindromic tree over an arbitrary integer alphabet, with series links.
/// Built incrementally; after feeding position n the table pal_len[n] holds
/// the minimal number of palindromic blocks covering the first n letters.
/// Runs in O(n log n) via the series-link factorization of palindromic
/// suffixes into arithmetic progressions of lengths.
class Eertree {
  public:
    Eertree();

    void push(std::uint32_t letter);
    std::size_t size() const { return word_.size(); }
    const std::vector<std::uint32_t>& pal_len() const { return dp_; }  // dp_[0] = 0

  private:
    struct Node {
        std::int64_t len;
        std::uint32_t link;
        std::uint32_t slink;   // longest proper suffix palindrome with a different diff
        std::int64_t diff;     // len - len(link)
        std::uint32_t g;       // cached best dp over the current series
        std::vector<std::pair<std::uint32_t, std::uint32_t>> next;  // sparse (letter, node)
    };

    std::uint32_t get_next(std::uint32_t node, std::uint32_t letter) const;
    void set_next(std::uint32_t node, std::uint32_t letter, std::uint32_t to);
    std::uint32_t find_ext(std::uint32_t node, std::uint32_t letter) const;

    std::vector<Node> nodes_;
    std::vector<std::uint32_t> word_;
    std::vector<std::uint32_t> dp_;
    std::uint32_t last_;
};

/// Minimal palindromic-block counts for every prefix of word; result[0] = 0.
std::vector<std::uint32_t> eertree_pal_lengths(std::span<const std::uint32_t> word);

}  // namespace palinruler
