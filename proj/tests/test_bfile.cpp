#include <doctest.h>

#include <cstdint>
#include <sstream>

#include "palinruler/bfile.hpp"
#include "palinruler/bitseq.hpp"

using namespace palinruler;

#ifndef PALINRULER_DATA_DIR
#error "PALINRULER_DATA_DIR must point at the bundled data directory"
#endif

TEST_CASE("b-file parsing skips comments and blanks") {
    std::istringstream in(
        "# header comment\n"
        "\n"
        "1 0\n"
        "  2 1\n"
        "\t3 0\n"
        "# trailing comment\n"
        "4 2\n");
    const BFile f = parse_bfile(in, 0);
    REQUIRE(f.entries.size() == 4);
    CHECK(f.entries[0] == BFileEntry{1, 0});
    CHECK(f.entries[3] == BFileEntry{4, 2});
    CHECK(f.offset == 0);
}

TEST_CASE("b-file parse errors carry line numbers") {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            parse_bfile(in, 0);
        } catch (const BFileParseError& e) {
            return e.line;
        }
        return 0;
    };
    CHECK(line_of("1 2\nbad line\n") == 2);
    CHECK(line_of("1 2 3\n") == 1);
    CHECK(line_of("1 2\n1 3\n") == 2);   // not strictly increasing
    CHECK(line_of("5 0\n4 0\n") == 2);
    CHECK(line_of("# fine\n1 1\n\nx\n") == 4);
}

TEST_CASE("offset semantics: entry (k,v) is compared against seq(k + offset)") {
    std::istringstream in("0 9\n1 0\n2 1\n3 0\n");
    const BFile f = parse_bfile(in, 0);

    // Offset 0: the k = 0 entry has no sequence counterpart and is skipped;
    // the rest match ruler exactly except the planted 9.
    const OeisCheckResult r0 = oeis_check(f, [](std::uint64_t n) {
        return static_cast<std::int64_t>(ruler(n));
    });
    CHECK(r0.skipped == 1);
    CHECK(r0.compared == 3);
    CHECK(r0.mismatches.empty());

    // Offset +1 shifts every comparison one step into the sequence.
    std::istringstream in2("0 0\n1 1\n2 0\n3 2\n");
    const BFile f2 = parse_bfile(in2, 1);
    const OeisCheckResult r1 = oeis_check(f2, [](std::uint64_t n) {
        return static_cast<std::int64_t>(ruler(n));
    });
    CHECK(r1.skipped == 0);
    CHECK(r1.compared == 4);
    CHECK(r1.mismatches.empty());

    // A wrong value is reported with the shifted index and both sides.
    std::istringstream in3("1 0\n2 7\n");
    const BFile f3 = parse_bfile(in3, 0);
    const OeisCheckResult r2 = oeis_check(f3, [](std::uint64_t n) {
        return static_cast<std::int64_t>(ruler(n));
    });
    REQUIRE(r2.mismatches.size() == 1);
    CHECK(r2.mismatches[0] == Mismatch{2, 7, 1});
}

TEST_CASE("negative shifted indices are skipped, truncation narrows the overlap") {
    std::istringstream in("1 1\n2 1\n3 2\n");
    const BFile f = parse_bfile(in, -2);
    const OeisCheckResult r = oeis_check(f, [](std::uint64_t n) {
        return static_cast<std::int64_t>(run_count(n));
    });
    CHECK(r.skipped == 2);  // shifted indices -1 and 0
    CHECK(r.compared == 1);  // entry (3,2) vs run_count(1) = 1 -> mismatch
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].index == 1);
}

TEST_CASE("bundled b-files load and are long enough") {
    for (const char* name : {"b007814.txt", "b096268.txt", "b005811.txt"}) {
        const BFile f = load_bfile(std::string(PALINRULER_DATA_DIR) + "/oeis/" + name, 0);
        CHECK(f.entries.size() >= 10000);
    }
    CHECK_THROWS(load_bfile(std::string(PALINRULER_DATA_DIR) + "/oeis/nope.txt", 0));
}
