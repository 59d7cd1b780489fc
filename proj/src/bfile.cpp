#include "palinruler/bfile.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace palinruler {

BFileParseError::BFileParseError(std::size_t line_, const std::string& what)
    : std::runtime_error("b-file line " + std::to_string(line_) + ": " + what),
      line(line_) {}

BFile parse_bfile(std::istream& in, std::int64_t offset) {
    BFile f;
    f.offset = offset;
    std::string line;
    std::size_t lineno = 0;
    bool have_prev = false;
    std::int64_t prev = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;          // blank
        if (line[first] == '#') continue;                  // comment
        std::istringstream ls(line.substr(first));
        BFileEntry e;
        if (!(ls >> e.index >> e.value))
            throw BFileParseError(lineno, "expected 'index value'");
        std::string extra;
        if (ls >> extra) throw BFileParseError(lineno, "trailing tokens");
        if (have_prev && e.index <= prev)
            throw BFileParseError(lineno, "indices not strictly increasing (" +
                                              std::to_string(e.index) + " after " +
                                              std::to_string(prev) + ")");
        have_prev = true;
        prev = e.index;
        f.entries.push_back(e);
    }
    return f;
}

BFile load_bfile(const std::filesystem::path& path, std::int64_t offset) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open b-file: " + path.string());
    return parse_bfile(in, offset);
}

OeisCheckResult oeis_check(const BFile& file,
                           const std::function<std::int64_t(std::uint64_t)>& seq) {
    OeisCheckResult res;
    for (const auto& e : file.entries) {
        const std::int64_t shifted = e.index + file.offset;
        if (shifted < 1) {
            ++res.skipped;
            continue;
        }
        const std::int64_t got = seq(static_cast<std::uint64_t>(shifted));
        ++res.compared;
        if (got != e.value) res.mismatches.push_back({shifted, e.value, got});
    }
    return res;
}

}  // namespace palinruler
