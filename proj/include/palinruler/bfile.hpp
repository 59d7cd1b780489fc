#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <stdexcept>
#include <vector>

namespace palinruler {

/// One line of an OEIS b-file: "index value".
struct BFileEntry {
    std::int64_t index = 0;
    std::int64_t value = 0;

    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Parsed b-file plus the index offset to apply when comparing: entry (k, v)
/// is checked against seq(k + offset). Entries must be strictly increasing.
struct BFile {
    std::vector<BFileEntry> entries;
    std::int64_t offset = 0;
};

struct BFileParseError : std::runtime_error {
    BFileParseError(std::size_t line, const std::string& what);
    std::size_t line;
};

BFile parse_bfile(std::istream& in, std::int64_t offset);
BFile load_bfile(const std::filesystem::path& path, std::int64_t offset);

struct Mismatch {
    std::int64_t index = 0;     // shifted index fed to seq
    std::int64_t expected = 0;  // file value
    std::int64_t got = 0;       // sequence value

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct OeisCheckResult {
    std::uint64_t compared = 0;
    std::uint64_t skipped = 0;  // shifted index outside the sequence domain
    std::vector<Mismatch> mismatches;
};

OeisCheckResult oeis_check(const BFile& file,
                           const std::function<std::int64_t(std::uint64_t)>& seq);

}  // namespace palinruler
