#include "orr/quotient.hpp"

#include "orr/notation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace orr {

namespace {

constexpr std::string_view kTable4 = R"(# groups G acting on a K3 surface Y with Y/G resolving to a K3 surface
# id,label,order,profile,R_X,c1c2
1,C_2,2,8A_1,2^16,24
2,C_3,3,6A_2,3^12,16
3,D_4,4,12A_1,2^24,12
4,C_4,4,"4A_3,2A_1","2^4,4^8",12
5,C_5,5,4A_4,5^8,48/5
6,D_6,6,"3A_2,8A_1","2^16,3^6",8
7,C_6,6,"2A_5,2A_2,2A_1","2^4,3^4,6^4",8
8,C_7,7,3A_6,7^6,48/7
10,D_8,8,"2A_3,9A_1","2^18,4^4",6
14,C_8,8,"2A_7,A_3,A_1","2^2,4^2,8^4",6
16,D_10,10,"2A_4,8A_1","2^16,5^4",24/5
17,A_4,12,"6A_2,4A_1","2^8,3^12",4
18,D_12,12,"A_5,A_2,9A_1","2^18,3^2,6^2",4
34,S_4,24,"2A_3,3A_2,5A_1","2^10,3^6,4^4",2
55,A_5,60,"2A_4,3A_2,4A_1","2^8,3^6,5^4",4/5
)";

constexpr std::string_view kTable5 = R"(# symplectic subgroups G_s (index 2 in G) when Y/G resolves to an Enriques surface
# id,label,order,profile,R_X,c1c2
1',C_2,4,4A_1,2^8,12
2',C_3,6,3A_2,3^6,8
3',D_4,8,6A_1,2^12,6
4',C_4,8,"2A_3,A_1","2^2,4^4",6
5',C_5,10,2A_4,5^4,24/5
7',C_6,12,"A_5,A_2,A_1","2^2,3^2,6^2",4
16',D_10,20,"A_4,4A_1","2^8,5^2",12/5
17',A_4,24,"3A_2,2A_1","2^4,3^6",2
)";

std::int64_t parse_count(std::string_view text, std::string_view term) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed singularity term '" + std::string(term) + "'");
    return value;
}

std::string describe_scenario(const QuotientScenario& s) {
    return "#" + s.id + " " + s.label + " |G|=" + std::to_string(s.group_order) + " Sing(S)={" +
           s.profile.to_string() + "} R_X={" + format_index_multiset(s.expected_indices) +
           "} c1c2=" + s.expected_c1c2.to_string();
}

IndexMultiset halve(const IndexMultiset& indices) {
    std::vector<IndexMultiset::Entry> halved;
    for (const auto& [r, count] : indices.entries()) {
        if (count % 2 != 0) return {};
        halved.emplace_back(r, count / 2);
    }
    return IndexMultiset(std::move(halved));
}

}  // namespace

SingularityProfile::SingularityProfile(std::vector<Entry> entries) {
    for (const auto& [n, count] : entries) {
        if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
        if (count < 1) throw std::invalid_argument("multiplicity must be at least 1");
    }
    std::sort(entries.begin(), entries.end());
    for (auto& entry : entries) {
        if (!entries_.empty() && entries_.back().first == entry.first)
            entries_.back().second += entry.second;
        else
            entries_.push_back(entry);
    }
}

SingularityProfile SingularityProfile::parse(std::string_view text) {
    text = trim(text);
    std::vector<Entry> entries;
    if (text.empty() || text == kEmptySetSymbol) return {};
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto term = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        const auto a = term.find("A_");
        if (a == std::string_view::npos) throw std::invalid_argument("expected kA_n, got '" + std::string(term) + "'");
        const std::int64_t count = a == 0 ? 1 : parse_count(term.substr(0, a), term);
        const std::int64_t n = parse_count(term.substr(a + 2), term);
        entries.emplace_back(n, count);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return SingularityProfile(std::move(entries));
}

std::string SingularityProfile::to_string() const {
    if (entries_.empty()) return std::string(kEmptySetSymbol);
    std::string out;
    for (const auto& [n, count] : entries_) {
        if (!out.empty()) out += ',';
        if (count > 1) out += std::to_string(count);
        out += "A_" + std::to_string(n);
    }
    return out;
}

std::string_view to_string(CoverType cover) { return cover == CoverType::K3 ? "K3" : "Enriques"; }

std::int64_t expected_chi(CoverType cover) { return cover == CoverType::K3 ? 2 : 1; }

bool QuotientScenario::same_content(const QuotientScenario& other) const {
    return group_order == other.group_order && profile == other.profile && cover == other.cover;
}

IndexMultiset indices_from_profile(const SingularityProfile& profile) {
    std::vector<IndexMultiset::Entry> entries;
    for (const auto& [n, count] : profile.entries()) entries.emplace_back(n + 1, 2 * count);
    return IndexMultiset(std::move(entries));
}

Rational quotient_c1c2(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("group order must be >= 1");
    return Rational(48, order);
}

bool ScenarioReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ScenarioReport::failed_ids() const {
    std::string ids;
    for (const auto& c : checks)
        if (!c.passed) ids += c.id;
    return ids;
}

std::string ScenarioReport::describe() const {
    std::ostringstream out;
    for (const auto& c : checks)
        out << "  #" << row_id << " check (" << c.id << ") " << (c.passed ? "ok  " : "FAIL") << " " << c.detail << "\n";
    return out.str();
}

ScenarioReport check_scenario(const QuotientScenario& s) {
    ScenarioReport report{s.id, {}};

    const auto derived = indices_from_profile(s.profile);
    report.checks.push_back({'a', derived == s.expected_indices,
                             "R_X from " + s.profile.to_string() + " = {" + format_index_multiset(derived) +
                                 "}, table {" + format_index_multiset(s.expected_indices) + "}"});

    if (s.group_order >= 1) {
        const auto c1c2 = quotient_c1c2(s.group_order);
        report.checks.push_back({'b', c1c2 == s.expected_c1c2,
                                 "48/" + std::to_string(s.group_order) + " = " + c1c2.to_string() + ", table " +
                                     s.expected_c1c2.to_string()});
    } else {
        report.checks.push_back({'b', false, "group order " + std::to_string(s.group_order) + " is not positive"});
    }

    const Rational chi = (s.expected_c1c2 + s.expected_indices.weight()) / Rational(24);
    report.checks.push_back({'c', chi == Rational(expected_chi(s.cover)),
                             "(c1c2 + weight)/24 = " + chi.to_string() + ", expected chi " +
                                 std::to_string(expected_chi(s.cover)) + " (" + std::string(to_string(s.cover)) + ")"});
    return report;
}

std::vector<QuotientScenario> derive_enriques(const std::vector<QuotientScenario>& k3_rows) {
    std::vector<QuotientScenario> out;
    for (const auto& row : k3_rows) {
        if (row.cover != CoverType::K3) throw std::invalid_argument("derive_enriques: row #" + row.id + " is not a K3 row");
        const auto& entries = row.profile.entries();
        const bool in_couples = std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second % 2 == 0; });
        if (!in_couples) continue;

        std::vector<SingularityProfile::Entry> halved;
        for (const auto& [n, count] : entries) halved.emplace_back(n, count / 2);

        QuotientScenario enr;
        enr.id = row.id + "'";
        enr.label = row.label;
        enr.group_order = 2 * row.group_order;
        enr.profile = SingularityProfile(std::move(halved));
        enr.cover = CoverType::Enriques;
        enr.expected_indices = indices_from_profile(enr.profile);
        enr.expected_c1c2 = row.expected_c1c2 / Rational(2);
        if (!(halve(row.expected_indices) == enr.expected_indices))
            throw std::invalid_argument("row #" + row.id + ": halved R_X {" + format_index_multiset(halve(row.expected_indices)) +
                                        "} disagrees with R_X of the halved profile {" +
                                        format_index_multiset(enr.expected_indices) + "}");
        out.push_back(std::move(enr));
    }
    return out;
}

std::string_view quotient_fixture(int table) {
    switch (table) {
        case 4:
            return kTable4;
        case 5:
            return kTable5;
        default:
            throw std::invalid_argument("no quotient table " + std::to_string(table));
    }
}

std::vector<QuotientScenario> parse_quotient_fixture(std::string_view text, CoverType cover) {
    std::vector<QuotientScenario> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto fields = csv::split(body);
        if (fields.size() != 6)
            throw std::invalid_argument("quotient fixture line " + std::to_string(line_no) + ": expected 6 fields");
        try {
            QuotientScenario s;
            s.id = std::string(trim(fields[0]));
            s.label = std::string(trim(fields[1]));
            s.group_order = std::stoll(fields[2]);
            s.profile = SingularityProfile::parse(fields[3]);
            s.cover = cover;
            s.expected_indices = parse_index_multiset(fields[4]);
            s.expected_c1c2 = Rational::parse(trim(fields[5]));
            rows.push_back(std::move(s));
        } catch (const std::exception& e) {
            throw std::invalid_argument("quotient fixture line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return rows;
}

std::string ScenarioSetDiff::describe() const {
    std::ostringstream out;
    for (const auto& s : missing) out << "  missing:    " << describe_scenario(s) << "\n";
    for (const auto& s : unexpected) out << "  unexpected: " << describe_scenario(s) << "\n";
    for (const auto& [want, got] : mismatched)
        out << "  mismatch:   table " << describe_scenario(want) << " vs derived " << describe_scenario(got) << "\n";
    return out.str();
}

ScenarioSetDiff compare_scenarios(const std::vector<QuotientScenario>& expected,
                                  const std::vector<QuotientScenario>& actual) {
    ScenarioSetDiff diff;
    std::vector<bool> used(expected.size(), false);
    for (const auto& got : actual) {
        bool found = false;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (used[i] || !expected[i].same_content(got)) continue;
            used[i] = true;
            found = true;
            if (!(expected[i].expected_indices == got.expected_indices) || expected[i].expected_c1c2 != got.expected_c1c2)
                diff.mismatched.emplace_back(expected[i], got);
            break;
        }
        if (!found) diff.unexpected.push_back(got);
    }
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (!used[i]) diff.missing.push_back(expected[i]);
    return diff;
}

}  // namespace orr
