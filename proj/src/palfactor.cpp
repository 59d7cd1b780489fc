#include "palinruler/palfactor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace palinruler {

namespace {

void check_pair(std::uint64_t i, std::uint64_t j, const char* who) {
    if (i < 1 || i > j)
        throw std::invalid_argument(std::string(who) + ": need 1 <= i <= j (got i=" +
                                    std::to_string(i) + ", j=" + std::to_string(j) + ")");
    if (j >= (std::uint64_t{1} << 62))
        throw std::invalid_argument(std::string(who) + ": index too large");
}

// Indices of [i, j] rescaled by the valuation of i + j: the interval covers
// the multiples A1..A2 of 2^sigma, whose letters dominate the comparison.
struct CoarseSplit {
    std::uint32_t sigma;
    std::uint64_t a1, a2;  // ceil(i / 2^sigma), floor(j / 2^sigma)
};

CoarseSplit coarse_split(std::uint64_t i, std::uint64_t j) {
    const auto sigma = static_cast<std::uint32_t>(std::countr_zero(i + j));
    const std::uint64_t low = (std::uint64_t{1} << sigma) - 1;
    return {sigma, (i >> sigma) + ((i & low) != 0), j >> sigma};
}

}  // namespace

const char* pal_form_name(PalForm f) {
    switch (f) {
        case PalForm::Singleton: return "singleton";
        case PalForm::ACenter: return "a-center";
        case PalForm::BRight: return "b-right";
        case PalForm::BLeft: return "b-left";
    }
    return "?";
}

bool is_pal_factor_a(std::uint64_t i, std::uint64_t j) {
    check_pair(i, j, "is_pal_factor_a");
    if (((i ^ j) & 1) != 0) return false;  // odd length needed
    const std::uint64_t m = (i + j) / 2;
    const std::uint64_t x = (j - i) / 2;
    return x < (std::uint64_t{1} << std::countr_zero(m));
}

bool is_pal_factor_b(std::uint64_t i, std::uint64_t j) {
    check_pair(i, j, "is_pal_factor_b");
    if (i == j) return true;
    const CoarseSplit cs = coarse_split(i, j);
    if (cs.a1 > cs.a2) return true;  // no coarse multiple inside: centered form
    const std::uint64_t k = cs.a2 - cs.a1 + 1;  // k is even: a1 + a2 is odd
    if (k != 2) return false;
    const std::uint64_t even = (cs.a1 % 2 == 0) ? cs.a1 : cs.a2;
    return (std::countr_zero(even) & 1) == 0;
}

std::optional<PalFactor> classify_pal_factor_b(std::uint64_t i, std::uint64_t j) {
    check_pair(i, j, "classify_pal_factor_b");
    PalFactor f;
    f.i = i;
    f.j = j;
    if (i == j) {
        f.form = PalForm::Singleton;
        f.v = ruler(i);
        f.o = i >> f.v;
        f.x = 0;
        return f;
    }
    const CoarseSplit cs = coarse_split(i, j);
    if (cs.a1 > cs.a2) {
        const std::uint64_t m = (i + j) / 2;  // i + j even here: sigma >= 1
        f.form = PalForm::ACenter;
        f.v = ruler(m);
        f.o = m >> f.v;
        f.x = (j - i) / 2;
        return f;
    }
    if (cs.a2 - cs.a1 + 1 != 2) return std::nullopt;
    const bool left_even = cs.a1 % 2 == 0;
    const std::uint64_t even = left_even ? cs.a1 : cs.a2;
    const auto e = static_cast<std::uint32_t>(std::countr_zero(even));
    if (e & 1) return std::nullopt;
    f.form = left_even ? PalForm::BRight : PalForm::BLeft;
    f.v2 = cs.sigma;
    f.v = cs.sigma + e;
    f.o = even >> e;
    const std::uint64_t anchor = even << cs.sigma;  // o * 2^v1
    f.x = left_even ? anchor - i : j - anchor;
    return f;
}

std::vector<std::uint64_t> pal_suffixes_a(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("pal_suffixes_a: need n >= 1");
    std::vector<std::uint64_t> out;
    for (std::uint64_t rest = n; rest != 0;) {
        const int v = 63 - std::countl_zero(rest);
        const std::uint64_t bit = std::uint64_t{1} << v;
        rest ^= bit;
        const std::uint64_t m = n & ~(bit - 1);
        out.push_back(2 * m - n);  // high bits first: ascending starts
    }
    return out;
}

std::vector<PalFactor> pal_suffixes_b(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("pal_suffixes_b: need n >= 1");
    std::vector<PalFactor> out;
    visit_pal_suffix_starts_b(n, [&](std::uint64_t start) {
        auto f = classify_pal_factor_b(start, n);
        if (!f)
            throw std::logic_error("pal_suffixes_b: enumerated non-palindrome");  // unreachable
        out.push_back(*f);
    });
    std::sort(out.begin(), out.end(),
              [](const PalFactor& p, const PalFactor& q) { return p.i < q.i; });
    return out;
}

MaskOp suffix_to_mask(std::uint64_t n, const PalFactor& f) {
    if (n == 0) throw std::invalid_argument("suffix_to_mask: need n >= 1");
    if (f.j != n || f.i < 1 || f.i > n)
        throw std::invalid_argument("suffix_to_mask: factor does not end at n");
    if (!is_pal_factor_b(f.i, f.j))
        throw std::invalid_argument("suffix_to_mask: factor is not palindromic");

    const auto k = static_cast<std::uint32_t>(std::bit_width(n));
    MaskOp op;
    switch (f.form) {
        case PalForm::Singleton:
        case PalForm::ACenter:
            op = MaskOp::type_a(k, k - f.v - 1);
            break;
        case PalForm::BRight:
        case PalForm::BLeft:
            op = MaskOp::type_b(k, k - f.v, f.v - f.v2);
            break;
    }
    // The defining property: the mask rewrites bin(n) into bin(i-1), padded.
    const BinaryWord got = apply_mask(op, to_binary(n));
    BinaryWord want = BinaryWord::zeros(k);
    if (f.i > 1) {
        const BinaryWord prev = to_binary(f.i - 1);
        std::copy(prev.bits.begin(), prev.bits.end(),
                  want.bits.begin() + static_cast<std::ptrdiff_t>(k - prev.size()));
    }
    if (got != want)
        throw std::invalid_argument("suffix_to_mask: inconsistent factor parameters");
    return op;
}

bool brute_pal_check(std::span<const std::uint32_t> word, std::uint64_t i, std::uint64_t j) {
    check_pair(i, j, "brute_pal_check");
    if (j > word.size())
        throw std::invalid_argument("brute_pal_check: j beyond word end");
    std::uint64_t lo = i - 1, hi = j - 1;  // to 0-based
    while (lo < hi) {
        if (word[lo] != word[hi]) return false;
        ++lo;
        --hi;
    }
    return true;
}

std::vector<PalFactor> enumerate_pal_factors(PalSeq seq, std::uint64_t n_max) {
    if (n_max == 0) throw std::invalid_argument("enumerate_pal_factors: need n_max >= 1");
    std::vector<PalFactor> out;

    // Centered families (all of seq a; the ACenter part of seq b).
    for (std::uint64_t m = 1; m <= n_max; ++m) {
        const auto v = ruler(m);
        const std::uint64_t radius = (std::uint64_t{1} << v) - 1;
        const std::uint64_t xmax = std::min({radius, m - 1, n_max - m});
        for (std::uint64_t x = 0; x <= xmax; ++x) {
            PalFactor f;
            f.i = m - x;
            f.j = m + x;
            f.form = x == 0 ? PalForm::Singleton : PalForm::ACenter;
            f.o = m >> v;
            f.v = v;
            f.x = x;
            out.push_back(f);
        }
    }

    if (seq == PalSeq::B) {
        // Off-center families, enumerated per valuation gap.
        for (std::uint32_t v2 = 0; (std::uint64_t{1} << v2) <= n_max; ++v2) {
            const std::uint64_t step = std::uint64_t{1} << v2;
            for (std::uint64_t beta = 3; beta * step <= n_max; ++beta) {
                const std::uint64_t even = (beta & 1) ? beta - 1 : beta;
                if (std::countr_zero(even) & 1) continue;
                const std::uint64_t anchor_j = beta * step;  // right coarse multiple
                for (std::uint64_t x = 0; x < step; ++x) {
                    if (anchor_j + x > n_max) break;
                    if (anchor_j < step + x + 1) continue;  // i >= 1
                    auto f = classify_pal_factor_b(anchor_j - step - x, anchor_j + x);
                    if (!f || (f->form != PalForm::BRight && f->form != PalForm::BLeft))
                        throw std::logic_error("enumerate_pal_factors: bad B candidate");
                    out.push_back(*f);
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const PalFactor& p, const PalFactor& q) {
        return p.i != q.i ? p.i < q.i : p.j < q.j;
    });
    return out;
}

}  // namespace palinruler
