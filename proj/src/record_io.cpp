#include "orr/record_io.hpp"

#include "orr/notation.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace orr {

namespace {

// Display width in code points; the table contents are ASCII apart from ∅ and ≈.
std::size_t display_width(std::string_view s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string approx(const Rational& value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value.approximate());
    return buf;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "jsonl" || name == "json-lines") return OutputFormat::JsonLines;
    if (name == "markdown" || name == "md") return OutputFormat::Markdown;
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string record_csv_line(const ChernRecord& record) {
    return csv::join({format_index_multiset(record.indices), std::to_string(record.cartier_index), record.c1c2.to_string(),
                      record.has_integral_basket ? "true" : "false",
                      record.witness ? format_basket(*record.witness) : std::string()});
}

std::string record_json_line(const ChernRecord& record) {
    nlohmann::ordered_json j;
    j["multiset"] = format_index_multiset(record.indices);
    j["chi"] = record.chi0;
    j["r_X"] = record.cartier_index;
    j["c1c2"] = record.c1c2.to_string();
    j["has_integral_basket"] = record.has_integral_basket;
    j["witness"] = record.witness ? nlohmann::ordered_json(format_basket(*record.witness)) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

std::string markdown_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size(), 3);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) widths[i] = std::max(widths[i], display_width(cells[i]));
    };
    widen(header);
    for (const auto& row : rows) {
        if (row.size() != header.size()) throw std::invalid_argument("markdown row has the wrong number of cells");
        widen(row);
    }
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        out += '|';
        for (std::size_t i = 0; i < cells.size(); ++i)
            out += ' ' + cells[i] + std::string(widths[i] - display_width(cells[i]), ' ') + " |";
        out += '\n';
    };
    line(header);
    out += '|';
    for (auto w : widths) out += std::string(w + 2, '-') + '|';
    out += '\n';
    for (const auto& row : rows) line(row);
    return out;
}

std::string render_records(const std::vector<ChernRecord>& records, OutputFormat format) {
    std::string out;
    switch (format) {
        case OutputFormat::Csv:
            out += kRecordCsvHeader;
            out += '\n';
            for (const auto& rec : records) out += record_csv_line(rec) + '\n';
            break;
        case OutputFormat::JsonLines:
            for (const auto& rec : records) out += record_json_line(rec) + '\n';
            break;
        case OutputFormat::Markdown: {
            std::vector<std::vector<std::string>> rows;
            std::size_t no = 0;
            for (const auto& rec : records)
                rows.push_back({std::to_string(++no), format_index_multiset(rec.indices), std::to_string(rec.cartier_index),
                                rec.c1c2.to_string(), approx(rec.c1c2), rec.has_integral_basket ? "yes" : "no",
                                rec.witness ? format_basket(*rec.witness) : "-"});
            out = markdown_table({"No.", "R_X", "r_X", "c1c2", "c1c2 (approx.)", "l(2) integral", "witness"}, rows);
            break;
        }
    }
    return out;
}

std::vector<ChernRecord> parse_records_csv(std::string_view text, std::int64_t chi0) {
    std::vector<ChernRecord> records;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty() || line == kRecordCsvHeader) continue;
        const auto fields = csv::split(line);
        if (fields.size() != 5) throw std::invalid_argument("record line " + std::to_string(line_no) + ": expected 5 fields");
        ChernRecord rec;
        rec.indices = parse_index_multiset(fields[0]);
        rec.chi0 = chi0;
        rec.cartier_index = std::stoll(fields[1]);
        rec.c1c2 = Rational::parse(fields[2]);
        if (fields[3] != "true" && fields[3] != "false")
            throw std::invalid_argument("record line " + std::to_string(line_no) + ": bad boolean '" + fields[3] + "'");
        rec.has_integral_basket = fields[3] == "true";
        if (!fields[4].empty()) rec.witness = parse_basket(fields[4]);
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace orr
