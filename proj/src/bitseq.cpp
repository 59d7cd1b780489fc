#include "palinruler/bitseq.hpp"

#include <bit>
#include <stdexcept>

namespace palinruler {

BinaryWord::BinaryWord(std::vector<std::uint8_t> b) : bits(std::move(b)) {
    for (auto d : bits)
        if (d > 1) throw std::invalid_argument("BinaryWord: digit out of {0,1}");
}

BinaryWord BinaryWord::zeros(std::size_t n) {
    BinaryWord w;
    w.bits.assign(n, 0);
    return w;
}

BinaryWord BinaryWord::parse(std::string_view s) {
    BinaryWord w;
    w.bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("BinaryWord::parse: invalid character '" +
                                        std::string(1, c) + "'");
        w.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return w;
}

bool BinaryWord::all_zero() const {
    for (auto d : bits)
        if (d) return false;
    return true;
}

std::string BinaryWord::str() const {
    std::string s;
    s.reserve(bits.size());
    for (auto d : bits) s.push_back(static_cast<char>('0' + d));
    return s;
}

std::uint32_t ruler(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("ruler: index must be >= 1");
    return static_cast<std::uint32_t>(std::countr_zero(n));
}

std::uint8_t period_doubling(std::uint64_t n) {
    return static_cast<std::uint8_t>(ruler(n) & 1);
}

std::uint32_t run_count(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("run_count: index must be >= 1");
    const int k = std::bit_width(n);
    std::uint32_t runs = 1;
    for (int i = 0; i + 1 < k; ++i)
        runs += ((n >> i) & 1) != ((n >> (i + 1)) & 1);
    return runs;
}

BinaryWord to_binary(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("to_binary: index must be >= 1");
    const int k = std::bit_width(n);
    BinaryWord w;
    w.bits.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) w.bits[static_cast<std::size_t>(i)] = (n >> (k - 1 - i)) & 1;
    return w;
}

std::uint64_t from_binary(const BinaryWord& w) {
    std::size_t first = 0;
    while (first < w.size() && w[first] == 0) ++first;
    if (w.size() - first > 64)
        throw std::overflow_error("from_binary: value does not fit in 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = first; i < w.size(); ++i) v = (v << 1) | w[i];
    return v;
}

RunEncoding run_encode(const BinaryWord& w) {
    if (w.empty()) throw std::invalid_argument("run_encode: empty word");
    RunEncoding enc;
    enc.first_bit = w[0];
    std::uint32_t len = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) {
            ++len;
        } else {
            enc.run_lengths.push_back(len);
            len = 1;
        }
    }
    enc.run_lengths.push_back(len);
    return enc;
}

std::uint32_t value_run_count(const BinaryWord& w) {
    std::size_t first = 0;
    while (first < w.size() && w[first] == 0) ++first;
    if (first == w.size()) return 0;
    std::uint32_t runs = 1;
    for (std::size_t i = first + 1; i < w.size(); ++i) runs += w[i] != w[i - 1];
    return runs;
}

std::vector<std::uint32_t> generate_prefix(SeqId id, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("generate_prefix: need n >= 1");
    std::vector<std::uint32_t> out;
    out.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) {
        switch (id) {
            case SeqId::Ruler: out.push_back(ruler(i)); break;
            case SeqId::PeriodDoubling: out.push_back(period_doubling(i)); break;
            case SeqId::RunCount: out.push_back(run_count(i)); break;
        }
    }
    return out;
}

}  // namespace palinruler
