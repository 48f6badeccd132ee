// Classification tables for chi(O_X) = 1 and their reproduction by enumeration.
//
// Fixture format: one CSV record per line, `multiset,r_X,c1c2`, with the
// multiset quoted when it contains commas. Lines starting with '#' and blank
// lines are ignored.

#pragma once

#include "orr/enumeration.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orr {

struct TableRow {
    IndexMultiset indices;
    std::int64_t cartier_index = 1;
    Rational c1c2;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// Embedded fixture: id 1 (c1c2 = 0) or 2 (-K not big, l(2) integral).
std::string_view table_fixture(int id);

std::vector<TableRow> parse_table_fixture(std::string_view text);
std::string format_table_row(const TableRow& row);
TableRow table_row(const ChernRecord& record);

struct TableDiff {
    std::vector<TableRow> missing;     // in the fixture, not produced
    std::vector<TableRow> unexpected;  // produced, not in the fixture
    std::vector<std::pair<TableRow, TableRow>> mismatched;  // (fixture, produced), same multiset
    std::vector<TableRow> duplicated;  // repeated fixture rows

    [[nodiscard]] bool ok() const {
        return missing.empty() && unexpected.empty() && mismatched.empty() && duplicated.empty();
    }
    [[nodiscard]] std::string describe() const;
};

/// Set comparison keyed by multiset.
TableDiff compare_table(const std::vector<TableRow>& fixture, const std::vector<ChernRecord>& produced);

/// The enumeration query whose output should equal table `id`.
EnumerationQuery table_query(int id, unsigned jobs = 1);

/// Table 1: chi = 1, c1c2 = 0. Table 2: chi = 1, some basket with l(2) in Z.
/// The empty multiset is excluded from both.
std::vector<ChernRecord> reproduce_table(int id, unsigned jobs = 1);

}  // namespace orr
