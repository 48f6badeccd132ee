#include "orr/cli.hpp"

#include "orr/enumeration.hpp"
#include "orr/notation.hpp"
#include "orr/quotient.hpp"
#include "orr/record_io.hpp"
#include "orr/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace orr::cli {

namespace {

// Input problems the user can fix; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path + "'");
    file << text;
    if (!file) throw UsageError("write to '" + path + "' failed");
}

std::string factorization_string(std::int64_t n) {
    std::string out;
    for (const auto& [p, e] : prime_factorization(n)) {
        if (!out.empty()) out += '*';
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
    std::int64_t chi = 1;
    std::string filter = "all";
    std::string lo;
    std::string hi;
    int depth = 2;
    bool include_empty = false;
    std::string format = "csv";
    std::string output;
    unsigned jobs = 1;
    bool unsafe_chi = false;
    bool count_only = false;
    std::string max_weight;
};

Filter parse_filter(const EnumerateArgs& a) {
    if (a.filter == "all") return Filter::all();
    if (a.filter == "c1c2-zero") return Filter::c1c2_zero();
    if (a.filter == "l2-integral") return Filter::integral_l2();
    if (a.filter == "c1c2-range") {
        if (a.lo.empty() || a.hi.empty()) throw UsageError("--filter c1c2-range needs --lo and --hi");
        return Filter::c1c2_in_range(Rational::parse(a.lo), Rational::parse(a.hi));
    }
    throw UsageError("unknown filter '" + a.filter + "'");
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    EnumerationQuery query;
    query.chi0 = a.chi;
    query.include_empty = a.include_empty;
    query.filter = parse_filter(a);
    query.integrality_depth = a.depth;
    query.allow_any_chi = a.unsafe_chi;
    query.jobs = a.jobs;
    if (!a.max_weight.empty()) query.weight_budget = Rational::parse(a.max_weight);
    const auto format = parse_output_format(a.format);
    query.validate();

    const auto records = enumerate_index_multisets(query);
    if (a.count_only) {
        write_output(std::to_string(records.size()) + "\n", a.output, out);
    } else {
        write_output(render_records(records, format), a.output, out);
    }
    return kExitOk;
}

// ------------------------------------------------------------ verify-tables

struct VerifyArgs {
    std::string table1;
    std::string table2;
    std::string table4;
    std::string table5;
    unsigned jobs = 1;
};

class Verifier {
public:
    explicit Verifier(std::ostream& out) : out_(out) {}

    void record(const std::string& name, bool ok, const std::string& detail = {}) {
        out_ << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok && !detail.empty()) out_ << detail;
        failures_ += ok ? 0 : 1;
    }

    [[nodiscard]] int exit_code() const { return failures_ == 0 ? kExitOk : kExitMismatch; }
    [[nodiscard]] int failures() const { return failures_; }

private:
    std::ostream& out_;
    int failures_ = 0;
};

std::string fixture_text(const std::string& path, std::string_view embedded) {
    return path.empty() ? std::string(embedded) : read_file(path);
}

template <typename Parse>
auto parse_fixture(const std::string& path, std::string_view embedded, Parse parse) {
    try {
        return parse(fixture_text(path, embedded));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(path.empty() ? "embedded fixture" : path) + ": " + e.what());
    }
}

int cmd_verify_tables(const VerifyArgs& a, std::ostream& out) {
    const auto table1 = parse_fixture(a.table1, table_fixture(1), [](const std::string& t) { return parse_table_fixture(t); });
    const auto table2 = parse_fixture(a.table2, table_fixture(2), [](const std::string& t) { return parse_table_fixture(t); });
    const auto table4 = parse_fixture(a.table4, quotient_fixture(4),
                                      [](const std::string& t) { return parse_quotient_fixture(t, CoverType::K3); });
    const auto table5 = parse_fixture(a.table5, quotient_fixture(5),
                                      [](const std::string& t) { return parse_quotient_fixture(t, CoverType::Enriques); });

    Verifier v(out);
    for (int id : {1, 2}) {
        const auto& fixture = id == 1 ? table1 : table2;
        const auto produced = reproduce_table(id, a.jobs);
        const auto diff = compare_table(fixture, produced);
        v.record("table " + std::to_string(id) + ": " + std::to_string(produced.size()) + " computed rows vs " +
                     std::to_string(fixture.size()) + " fixture rows",
                 diff.ok(), diff.describe());
    }

    for (const auto& row : table4) {
        const auto report = check_scenario(row);
        v.record("table 4 #" + row.id + " " + row.label, report.passed(), report.describe());
    }
    for (const auto& row : table5) {
        const auto report = check_scenario(row);
        v.record("table 5 #" + row.id + " " + row.label, report.passed(), report.describe());
    }
    try {
        const auto derived = derive_enriques(table4);
        const auto diff = compare_scenarios(table5, derived);
        v.record("table 5 derived from table 4: " + std::to_string(derived.size()) + " rows", diff.ok(), diff.describe());
    } catch (const std::invalid_argument& e) {
        v.record("table 5 derived from table 4", false, std::string("  ") + e.what() + "\n");
    }

    const auto minimum = min_positive_c1c2(1, false, a.jobs);
    const bool min_ok = minimum && minimum->value == Rational(1, 252);
    v.record("minimal positive c1c2 for chi=1 is 1/252", min_ok,
             "  computed " + (minimum ? minimum->value.to_string() : std::string("none")) + "\n");
    if (minimum) {
        const auto b = effective_bound(Rational(324), minimum->value);
        v.record("effective bound 324/(1/252) = 81648 = 2^4*3^6*7",
                 b == Rational(81648) && b.is_integer() && factorization_string(81648) == "2^4*3^6*7",
                 "  computed " + b.to_string() + "\n");
    }
    v.record("Gorenstein bound 72/24 = 3", effective_bound(Rational(72), Rational(24)) == Rational(3));
    v.record("abelian cover c1c2 = 0", abelian_cover_c1c2() == Rational(0));
    bool smooth_ok = true;
    for (std::int64_t chi : {0, 1, 2}) smooth_ok = smooth_ok && c1c2_from_indices({}, chi) == Rational(24 * chi);
    v.record("smooth case c1c2 = 24 chi for chi in {0,1,2}", smooth_ok);

    out << (v.failures() == 0 ? "all checks passed\n" : std::to_string(v.failures()) + " check(s) failed\n");
    return v.exit_code();
}

// --------------------------------------------------------------- chi-series

struct ChiSeriesArgs {
    std::string basket;
    std::int64_t chi = 1;
    std::string kcube = "0";
    std::int64_t n_max = 5;
    std::string format = "csv";
};

int cmd_chi_series(const ChiSeriesArgs& a, std::ostream& out) {
    if (a.n_max < 0) throw UsageError("--n-max must be >= 0");
    Basket basket;
    try {
        basket = parse_basket(a.basket);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("malformed basket: ") + e.what());
    }
    const ChernContext ctx{a.chi, Rational::parse(a.kcube)};
    const auto format = parse_output_format(a.format);

    std::vector<std::vector<std::string>> rows;
    for (std::int64_t n = 0; n <= a.n_max; ++n)
        rows.push_back({std::to_string(n), l_value(basket, n + 1).to_string(), chi_minus_nK(basket, ctx, n).to_string()});

    std::string text;
    switch (format) {
        case OutputFormat::Csv:
            text = "n,l(n+1),chi(-nK)\n";
            for (const auto& row : rows) text += csv::join(row) + "\n";
            break;
        case OutputFormat::JsonLines:
            for (const auto& row : rows) {
                nlohmann::ordered_json j;
                j["n"] = std::stoll(row[0]);
                j["l"] = row[1];
                j["chi"] = row[2];
                text += j.dump() + "\n";
            }
            break;
        case OutputFormat::Markdown:
            text = markdown_table({"n", "l(n+1)", "chi(-nK)"}, rows);
            break;
    }
    out << text;
    return kExitOk;
}

// ---------------------------------------------------------------------- min

struct MinArgs {
    std::int64_t chi = 1;
    bool not_big = false;
    unsigned jobs = 1;
};

int cmd_min(const MinArgs& a, std::ostream& out) {
    EnumerationQuery probe;
    probe.chi0 = a.chi;
    probe.validate();
    const auto result = min_positive_c1c2(a.chi, a.not_big, a.jobs);
    if (!result) {
        out << "no positive value of c1c2 for chi=" << a.chi << "\n";
        return kExitMismatch;
    }
    out << result->value.to_string();
    for (const auto& indices : result->attained_by) out << "  " << format_index_multiset(indices);
    out << "\n";
    return kExitOk;
}

// ----------------------------------------------------------------- quotient

struct QuotientArgs {
    int table = 4;
    std::string fixture;
    std::string against;
};

int cmd_quotient_check(const QuotientArgs& a, std::ostream& out) {
    if (a.table != 4 && a.table != 5) throw UsageError("--table must be 4 or 5");
    const auto cover = a.table == 4 ? CoverType::K3 : CoverType::Enriques;
    const auto rows = parse_fixture(a.fixture, quotient_fixture(a.table),
                                    [cover](const std::string& t) { return parse_quotient_fixture(t, cover); });
    Verifier v(out);
    for (const auto& row : rows) {
        const auto report = check_scenario(row);
        v.record("#" + row.id + " " + row.label, report.passed(), report.describe());
    }
    return v.exit_code();
}

int cmd_quotient_derive(const QuotientArgs& a, std::ostream& out) {
    const auto k3 = parse_fixture(a.fixture, quotient_fixture(4),
                                  [](const std::string& t) { return parse_quotient_fixture(t, CoverType::K3); });
    const auto expected = parse_fixture(a.against, quotient_fixture(5),
                                        [](const std::string& t) { return parse_quotient_fixture(t, CoverType::Enriques); });
    std::vector<QuotientScenario> derived;
    try {
        derived = derive_enriques(k3);
    } catch (const std::invalid_argument& e) {
        out << "FAIL " << e.what() << "\n";
        return kExitMismatch;
    }
    out << "# id,label,order,profile,R_X,c1c2\n";
    for (const auto& s : derived)
        out << csv::join({s.id, s.label, std::to_string(s.group_order), s.profile.to_string(),
                          format_index_multiset(s.expected_indices), s.expected_c1c2.to_string()})
            << "\n";
    const auto diff = compare_scenarios(expected, derived);
    if (!diff.ok()) {
        out << "FAIL derived rows differ from the Enriques table\n" << diff.describe();
        return kExitMismatch;
    }
    out << "PASS " << derived.size() << " rows match the Enriques table\n";
    return kExitOk;
}

// -------------------------------------------------------------------- bound

struct BoundArgs {
    std::string max_cube = "324";
    std::string min_positive;
    unsigned jobs = 1;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
    const Rational cube = Rational::parse(a.max_cube);
    Rational minimum;
    if (a.min_positive.empty()) {
        const auto result = min_positive_c1c2(1, false, a.jobs);
        if (!result) throw std::logic_error("no positive c1c2 for chi=1");
        minimum = result->value;
    } else {
        minimum = Rational::parse(a.min_positive);
    }
    const Rational b = effective_bound(cube, minimum);
    out << cube << " / (" << minimum << ") = " << b;
    if (b.is_integer() && b.sign() > 0 && b.numerator().fits_slong_p())
        out << " = " << factorization_string(b.numerator().get_si());
    out << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbifold Riemann-Roch bookkeeping for terminal 3-folds with nef anti-canonical divisor", "orr"};
    app.require_subcommand(1);

    EnumerateArgs enumerate;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate index multisets with sum(r - 1/r) <= 24 chi");
    enumerate_cmd->add_option("--chi", enumerate.chi, "chi(O_X)")->capture_default_str();
    enumerate_cmd->add_option("--filter", enumerate.filter, "all | c1c2-zero | l2-integral | c1c2-range")->capture_default_str();
    enumerate_cmd->add_option("--lo", enumerate.lo, "lower c1c2 bound for c1c2-range (inclusive)");
    enumerate_cmd->add_option("--hi", enumerate.hi, "upper c1c2 bound for c1c2-range (inclusive)");
    enumerate_cmd->add_option("--depth", enumerate.depth, "require l(m) integral for 2 <= m <= depth")->capture_default_str();
    enumerate_cmd->add_flag("--include-empty", enumerate.include_empty, "also emit the empty multiset");
    enumerate_cmd->add_option("--format", enumerate.format, "csv | jsonl | markdown")->capture_default_str();
    enumerate_cmd->add_option("-o,--output", enumerate.output, "output file (default stdout)");
    enumerate_cmd->add_option("--jobs", enumerate.jobs, "worker threads")->capture_default_str();
    enumerate_cmd->add_flag("--unsafe-chi", enumerate.unsafe_chi, "allow chi outside {0,1,2}");
    enumerate_cmd->add_flag("--count", enumerate.count_only, "print only the number of records");
    enumerate_cmd->add_option("--max-weight", enumerate.max_weight, "override the weight budget 24*chi");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify-tables", "recompute every classification table and compare with fixtures");
    verify_cmd->add_option("--table1", verify.table1, "fixture file replacing the embedded table 1");
    verify_cmd->add_option("--table2", verify.table2, "fixture file replacing the embedded table 2");
    verify_cmd->add_option("--table4", verify.table4, "fixture file replacing the embedded table 4");
    verify_cmd->add_option("--table5", verify.table5, "fixture file replacing the embedded table 5");
    verify_cmd->add_option("--jobs", verify.jobs, "worker threads")->capture_default_str();

    ChiSeriesArgs series;
    auto* series_cmd = app.add_subcommand("chi-series", "tabulate l(n+1) and chi(-nK) for a basket");
    series_cmd->add_option("--basket", series.basket, "basket, e.g. \"(1,2)^3,(1,4)\"")->required();
    series_cmd->add_option("--chi", series.chi, "chi(O_X)")->capture_default_str();
    series_cmd->add_option("--kcube", series.kcube, "(-K_X)^3 as an exact fraction")->capture_default_str();
    series_cmd->add_option("--n-max", series.n_max, "largest n")->capture_default_str();
    series_cmd->add_option("--format", series.format, "csv | jsonl | markdown")->capture_default_str();

    MinArgs min;
    auto* min_cmd = app.add_subcommand("min", "smallest positive c1c2 and every multiset attaining it");
    min_cmd->add_option("--chi", min.chi, "chi(O_X)")->capture_default_str();
    min_cmd->add_flag("--not-big", min.not_big, "restrict to multisets with an l(2)-integral basket");
    min_cmd->add_option("--jobs", min.jobs, "worker threads")->capture_default_str();

    QuotientArgs quotient;
    auto* quotient_cmd = app.add_subcommand("quotient", "checks on quotients of P^1 x K3");
    quotient_cmd->require_subcommand(1);
    auto* check_cmd = quotient_cmd->add_subcommand("check", "verify each row of table 4 or 5");
    check_cmd->add_option("--table", quotient.table, "4 or 5")->required();
    check_cmd->add_option("--fixture", quotient.fixture, "fixture file replacing the embedded table");
    auto* derive_cmd = quotient_cmd->add_subcommand("derive-enriques", "derive the Enriques table from the K3 table");
    derive_cmd->add_option("--fixture", quotient.fixture, "K3 fixture file replacing the embedded table 4");
    derive_cmd->add_option("--against", quotient.against, "Enriques fixture file replacing the embedded table 5");

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "constant b with c1^3 <= b c1.c2");
    bound_cmd->add_option("--max-cube", bound.max_cube, "upper bound for (-K)^3")->capture_default_str();
    bound_cmd->add_option("--min-positive", bound.min_positive, "lower bound for positive c1c2 (default: computed)");
    bound_cmd->add_option("--jobs", bound.jobs, "worker threads")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*enumerate_cmd) return cmd_enumerate(enumerate, out);
        if (*verify_cmd) return cmd_verify_tables(verify, out);
        if (*series_cmd) return cmd_chi_series(series, out);
        if (*min_cmd) return cmd_min(min, out);
        if (*check_cmd) return cmd_quotient_check(quotient, out);
        if (*derive_cmd) return cmd_quotient_derive(quotient, out);
        if (*bound_cmd) return cmd_bound(bound, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command given\n";
    return kExitUsage;
}

}  // namespace orr::cli
