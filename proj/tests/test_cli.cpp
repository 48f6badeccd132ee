#include "orr/cli.hpp"
#include "orr/notation.hpp"
#include "orr/record_io.hpp"
#include "orr/quotient.hpp"
#include "orr/tables.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace orr;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string join(const std::vector<std::string>& args) {
    std::string out;
    for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
    return out;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// Temporary file removed on scope exit.
class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("orr_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
    [[nodiscard]] std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string without_line(std::string_view text, std::string_view line_prefix) {
    std::string out;
    for (const auto& line : lines(std::string(text)))
        if (line.rfind(line_prefix, 0) != 0) out += line + "\n";
    return out;
}

std::string replace_once(std::string text, std::string_view from, std::string_view to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    return text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate c1c2-zero prints the eleven rows") {
    const auto r = run({"enumerate", "--chi", "1", "--filter", "c1c2-zero"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == kRecordCsvHeader);
    CHECK(rows[1] == "2^16,2,0,true,\"(1,2)^16\"");
}

TEST_CASE("enumerate chi 0 with the empty multiset") {
    const auto r = run({"enumerate", "--chi", "0", "--include-empty"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].rfind("∅,1,0", 0) == 0);
}

TEST_CASE("csv output re-parses to the in-memory records") {
    const auto r = run({"enumerate", "--chi", "1", "--filter", "l2-integral", "--format", "csv"});
    CHECK(r.code == 0);
    const auto parsed = parse_records_csv(r.out, 1);
    CHECK(parsed.size() == 40);
    CHECK(parsed == reproduce_table(2));

    EnumerationQuery all;
    all.chi0 = 1;
    all.include_empty = true;
    const auto records = enumerate_index_multisets(all);
    CHECK(parse_records_csv(render_records(records, OutputFormat::Csv), 1) == records);
}

TEST_CASE("json lines carry exact fractions") {
    const auto r = run({"enumerate", "--chi", "1", "--filter", "l2-integral", "--format", "jsonl"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 40);
    bool saw_min = false;
    for (const auto& row : rows) {
        const auto j = nlohmann::json::parse(row);
        CHECK(j["chi"] == 1);
        CHECK(j["has_integral_basket"] == true);
        CHECK(j["witness"].is_string());
        if (j["multiset"] == "2^4,3^3,5^2") {
            saw_min = true;
            CHECK(j["c1c2"] == "2/5");
            CHECK(j["r_X"] == 30);
        }
    }
    CHECK(saw_min);
}

TEST_CASE("markdown marks decimals as approximate") {
    const auto r = run({"enumerate", "--chi", "1", "--filter", "c1c2-range", "--lo", "1/252", "--hi", "1/252", "--format", "markdown"});
    CHECK(r.code == 0);
    CHECK(r.out.find("c1c2 (approx.)") != std::string::npos);
    CHECK(r.out.find("| 2^3,4,7,9 |") != std::string::npos);
    CHECK(r.out.find("0.003968") != std::string::npos);
}

TEST_CASE("enumerate writes to --output and counts with --count") {
    TempFile file("");
    CHECK(run({"enumerate", "--chi", "1", "--filter", "c1c2-zero", "--output", file.path()}).code == 0);
    std::ifstream in(file.path());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(lines(buf.str()).size() == 12);
    const auto counted = run({"enumerate", "--chi", "1", "--filter", "l2-integral", "--count"});
    CHECK(counted.out == "40\n");
}

TEST_CASE("usage errors exit with 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"enumerate", "--chi", "3"},
             {"enumerate", "--chi", "-1", "--unsafe-chi"},
             {"enumerate", "--filter", "bogus"},
             {"enumerate", "--filter", "c1c2-range", "--lo", "1"},
             {"enumerate", "--filter", "c1c2-range", "--lo", "2", "--hi", "1"},
             {"enumerate", "--format", "xml"},
             {"enumerate", "--jobs", "0"},
             {"enumerate", "--depth", "1"},
             {"enumerate", "--chi", "one"},
             {"enumerate", "--no-such-flag"},
             {"frobnicate"},
             {"chi-series"},
             {"chi-series", "--basket", "(1,2", "--n-max", "1"},
             {"chi-series", "--basket", "(1,2)", "--kcube", "1/0"},
             {"chi-series", "--basket", "(1,2)", "--n-max", "-1"},
             {"min", "--chi", "5"},
             {"quotient"},
             {"quotient", "check", "--table", "3"},
             {"bound", "--min-positive", "0"},
             {"verify-tables", "--table2", "/nonexistent/table2.txt"},
         }) {
        const auto r = run(args);
        CHECK_MESSAGE(r.code == cli::kExitUsage, "args: " << join(args));
        CHECK_FALSE(r.err.empty());
    }
    CHECK(run({"enumerate", "--chi", "3", "--unsafe-chi", "--max-weight", "6", "--count"}).code == 0);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("chi-series") {
    auto r = run({"chi-series", "--basket", "(1,7),(2,7),(3,7)", "--chi", "1", "--kcube", "0", "--n-max", "1"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"n,l(n+1),chi(-nK)", "0,0,1", "1,2,1"});

    r = run({"chi-series", "--basket", "", "--chi", "1", "--kcube", "2", "--n-max", "1"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "1,0,4");

    r = run({"chi-series", "--basket", "(1,2)^16", "--kcube", "0", "--n-max", "2", "--format", "jsonl"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(lines(r.out)[1]);
    CHECK(j["l"] == "4");
    CHECK(j["chi"] == "-1");

    r = run({"chi-series", "--basket", "(2,4)", "--n-max", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("not coprime") != std::string::npos);
    CHECK(run({"chi-series", "--basket", "(4,7)"}).code == 2);
}

TEST_CASE("min") {
    auto r = run({"min", "--chi", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/252  2^3,4,7,9\n");
    r = run({"min", "--chi", "1", "--not-big"});
    CHECK(r.code == 0);
    CHECK(r.out == "2/5  2^4,3^3,5^2\n");
    r = run({"min", "--chi", "0"});
    CHECK(r.code == 1);
    CHECK(r.out.find("no positive value") != std::string::npos);
}

TEST_CASE("verify-tables on the embedded fixtures") {
    const auto r = run({"verify-tables"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify-tables reports a deleted table 2 row") {
    TempFile table2(without_line(table_fixture(2), "7^3,"));
    const auto r = run({"verify-tables", "--table2", table2.path()});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL table 2") != std::string::npos);
    CHECK(r.out.find("computed, not in fixture: {7^3}") != std::string::npos);
}

TEST_CASE("verify-tables reports a wrong group order") {
    TempFile table4(replace_once(std::string(quotient_fixture(4)), "55,A_5,60,", "55,A_5,59,"));
    const auto r = run({"verify-tables", "--table4", table4.path()});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL table 4 #55") != std::string::npos);
    CHECK(r.out.find("check (b) FAIL 48/59 = 48/59, table 4/5") != std::string::npos);
}

TEST_CASE("verify-tables rejects an unreadable fixture format with 2") {
    TempFile table1("5^5,5\n");
    const auto r = run({"verify-tables", "--table1", table1.path()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1") != std::string::npos);
}

TEST_CASE("quotient subcommands") {
    auto r = run({"quotient", "check", "--table", "4"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 15);
    r = run({"quotient", "check", "--table", "5"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 8);

    r = run({"quotient", "derive-enriques"});
    CHECK(r.code == 0);
    CHECK(r.out.find("16',") != std::string::npos);
    CHECK(r.out.find("\"4A_1,A_4\",\"2^8,5^2\",12/5") != std::string::npos);
    CHECK(r.out.find("PASS 8 rows") != std::string::npos);

    TempFile k3(without_line(quotient_fixture(4), "17,"));
    r = run({"quotient", "derive-enriques", "--fixture", k3.path()});
    CHECK(r.code == 1);
    CHECK(r.out.find("#17'") != std::string::npos);

    TempFile tampered(replace_once(std::string(quotient_fixture(4)), "1,C_2,2,8A_1,2^16,24", "1,C_2,2,8A_1,2^16,23"));
    r = run({"quotient", "check", "--table", "4", "--fixture", tampered.path()});
    CHECK(r.code == 1);
    CHECK(r.out.find("#1 check (b) FAIL") != std::string::npos);
    CHECK(r.out.find("#1 check (c) FAIL") != std::string::npos);
}

TEST_CASE("bound") {
    auto r = run({"bound"});
    CHECK(r.code == 0);
    CHECK(r.out == "324 / (1/252) = 81648 = 2^4*3^6*7\n");
    r = run({"bound", "--max-cube", "72", "--min-positive", "24"});
    CHECK(r.out == "72 / (24) = 3 = 3\n");
    r = run({"bound", "--max-cube", "1", "--min-positive", "3"});
    CHECK(r.out == "1 / (3) = 1/3\n");
}

TEST_CASE("repeated runs are byte-identical") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"enumerate", "--chi", "1"},
             {"enumerate", "--chi", "1", "--format", "jsonl", "--jobs", "3"},
             {"verify-tables"},
             {"chi-series", "--basket", "(1,2)^3,(2,5)", "--kcube", "1/2", "--n-max", "8"},
         }) {
        const auto first = run(args);
        const auto second = run(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }
}

}
