// Machine- and human-readable renderings of enumeration records.
//
// CSV columns: multiset,r_X,c1c2,has_integral_basket,witness
// Fractions are always exact; only the markdown table adds a decimal column,
// headed as approximate.

#pragma once

#include "orr/enumeration.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orr {

enum class OutputFormat { Csv, JsonLines, Markdown };

/// "csv", "jsonl" or "markdown"; throws std::invalid_argument otherwise.
OutputFormat parse_output_format(std::string_view name);

inline constexpr std::string_view kRecordCsvHeader = "multiset,r_X,c1c2,has_integral_basket,witness";

std::string record_csv_line(const ChernRecord& record);
std::string record_json_line(const ChernRecord& record);

std::string render_records(const std::vector<ChernRecord>& records, OutputFormat format);

/// Inverse of the CSV rendering (header optional). chi0 is not a column, so it is supplied.
std::vector<ChernRecord> parse_records_csv(std::string_view text, std::int64_t chi0);

/// Left-aligned markdown table; every row must have header.size() cells.
std::string markdown_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace orr
