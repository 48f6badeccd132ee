#include "orr/tables.hpp"

#include "orr/notation.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace orr {

namespace {

// Rows in classification order.
constexpr std::string_view kTable1 = R"(# chi = 1, c1c2 = 0
# multiset,r_X,c1c2
5^5,5,0
"2^3,4,8^2",8,0
"2^3,5^2,10",10,0
"2^2,3^2,4,12",12,0
"2,4^6",4,0
"3^4,4^2,6",12,0
3^9,3,0
"2^6,4^4",4,0
"2^5,3^4,6",6,0
"2^11,4^2",4,0
2^16,2,0
)";

constexpr std::string_view kTable2 = R"(# chi = 1, -K nef but not big (l(2) integral for some basket)
# multiset,r_X,c1c2
5^2,5,72/5
"2,3,6",6,14
"2,4^2",4,15
3^3,3,16
7^3,7,24/7
2^4,2,18
"2^2,10^2",10,6/5
"2,4,8^2",8,3
5^4,5,24/5
"2,3,5^2,6",30,22/5
"2,4^2,5^2",20,27/5
"3^3,5^2",15,32/5
5^5,5,0
"2^4,5^2",10,42/5
"2^3,4,8^2",8,0
"2^3,5^2,10",10,0
"2^3,6^3",6,2
"2^2,3^2,4,12",12,0
"2^2,3^2,6^2",6,4
"2^2,3,4^2,6",12,5
"2^2,4^4",4,6
"2,3^4,6",6,6
"2,3^3,4^2",12,7
3^6,3,8
"2^5,3,6",6,8
"2^5,4^2",4,9
"2^4,3^3",6,10
2^8,2,12
"2^4,3^3,5^2",30,2/5
3^9,3,0
"2^8,5^2",10,12/5
"2^6,4^4",4,0
"2^5,3^4,6",6,0
"2^5,3^3,4^2",12,1
"2^4,3^6",6,2
"2^9,3,6",6,2
"2^9,4^2",4,3
"2^8,3^3",6,4
2^12,2,6
2^16,2,0
)";

std::string describe_row(const TableRow& row) {
    return "{" + format_index_multiset(row.indices) + "} r_X=" + std::to_string(row.cartier_index) +
           " c1c2=" + row.c1c2.to_string();
}

}  // namespace

std::string_view table_fixture(int id) {
    switch (id) {
        case 1:
            return kTable1;
        case 2:
            return kTable2;
        default:
            throw std::invalid_argument("no classification table " + std::to_string(id));
    }
}

std::vector<TableRow> parse_table_fixture(std::string_view text) {
    std::vector<TableRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        auto fields = csv::split(body);
        if (fields.size() != 3)
            throw std::invalid_argument("table fixture line " + std::to_string(line_no) + ": expected 3 fields");
        try {
            TableRow row;
            row.indices = parse_index_multiset(fields[0]);
            row.cartier_index = std::stoll(fields[1]);
            row.c1c2 = Rational::parse(trim(fields[2]));
            rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            throw std::invalid_argument("table fixture line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return rows;
}

std::string format_table_row(const TableRow& row) {
    return csv::join({format_index_multiset(row.indices), std::to_string(row.cartier_index), row.c1c2.to_string()});
}

TableRow table_row(const ChernRecord& record) { return {record.indices, record.cartier_index, record.c1c2}; }

std::string TableDiff::describe() const {
    std::ostringstream out;
    for (const auto& row : missing) out << "  in fixture, not computed: " << describe_row(row) << "\n";
    for (const auto& row : unexpected) out << "  computed, not in fixture: " << describe_row(row) << "\n";
    for (const auto& [want, got] : mismatched)
        out << "  mismatch: fixture " << describe_row(want) << " vs computed " << describe_row(got) << "\n";
    for (const auto& row : duplicated) out << "  duplicate fixture row: " << describe_row(row) << "\n";
    return out.str();
}

TableDiff compare_table(const std::vector<TableRow>& fixture, const std::vector<ChernRecord>& produced) {
    TableDiff diff;
    std::map<IndexMultiset, TableRow> expected;
    for (const auto& row : fixture) {
        if (!expected.emplace(row.indices, row).second) diff.duplicated.push_back(row);
    }
    for (const auto& rec : produced) {
        auto row = table_row(rec);
        auto it = expected.find(row.indices);
        if (it == expected.end()) {
            diff.unexpected.push_back(row);
            continue;
        }
        if (!(it->second == row)) diff.mismatched.emplace_back(it->second, row);
        expected.erase(it);
    }
    for (auto& [key, row] : expected) diff.missing.push_back(row);
    return diff;
}

EnumerationQuery table_query(int id, unsigned jobs) {
    EnumerationQuery query;
    query.chi0 = 1;
    query.jobs = jobs;
    switch (id) {
        case 1:
            query.filter = Filter::c1c2_zero();
            break;
        case 2:
            query.filter = Filter::integral_l2();
            break;
        default:
            throw std::invalid_argument("no classification table " + std::to_string(id));
    }
    return query;
}

std::vector<ChernRecord> reproduce_table(int id, unsigned jobs) { return enumerate_index_multisets(table_query(id, jobs)); }

}  // namespace orr
