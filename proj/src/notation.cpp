#include "orr/notation.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace orr {

namespace {

bool is_empty_form(std::string_view text) { return text.empty() || text == kEmptySetSymbol; }

std::int64_t parse_int(std::string_view text, std::string_view context) {
    text = trim(text);
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last)
        throw std::invalid_argument("expected an integer in '" + std::string(context) + "'");
    return value;
}

// Splits "base^k" into (base, k); k = 1 when there is no exponent.
std::pair<std::string_view, std::int64_t> split_power(std::string_view term) {
    auto caret = term.rfind('^');
    if (caret == std::string_view::npos || term.find(')', caret) != std::string_view::npos)
        return {term, 1};
    const std::int64_t k = parse_int(term.substr(caret + 1), term);
    if (k < 2) throw std::invalid_argument("exponent must be >= 2 in '" + std::string(term) + "'");
    return {trim(term.substr(0, caret)), k};
}

std::string power_suffix(std::int64_t count) { return count >= 2 ? "^" + std::to_string(count) : ""; }

}  // namespace

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

IndexMultiset parse_index_multiset(std::string_view text) {
    text = trim(text);
    if (is_empty_form(text)) return {};
    std::vector<IndexMultiset::Entry> entries;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto term = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (term.empty()) throw std::invalid_argument("empty term in index multiset '" + std::string(text) + "'");
        auto [base, k] = split_power(term);
        const std::int64_t r = parse_int(base, term);
        if (r < 2) throw std::invalid_argument("local index must be >= 2 in '" + std::string(term) + "'");
        entries.emplace_back(r, k);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IndexMultiset(std::move(entries));
}

std::string format_index_multiset(const IndexMultiset& indices) {
    if (indices.empty()) return std::string(kEmptySetSymbol);
    std::string out;
    for (const auto& [r, count] : indices.entries()) {
        if (!out.empty()) out += ',';
        out += std::to_string(r) + power_suffix(count);
    }
    return out;
}

Basket parse_basket(std::string_view text) {
    text = trim(text);
    if (is_empty_form(text)) return {};
    std::vector<Basket::Entry> entries;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size() || text[pos] != '(')
            throw std::invalid_argument("expected '(' in basket '" + std::string(text) + "'");
        auto close = text.find(')', pos);
        if (close == std::string_view::npos)
            throw std::invalid_argument("unterminated pair in basket '" + std::string(text) + "'");
        auto inner = text.substr(pos + 1, close - pos - 1);
        auto comma = inner.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("pair needs two entries: '(" + std::string(inner) + ")'");
        const std::int64_t b = parse_int(inner.substr(0, comma), inner);
        const std::int64_t r = parse_int(inner.substr(comma + 1), inner);
        auto next = text.find(',', close);
        auto tail = trim(text.substr(close + 1, next == std::string_view::npos ? std::string_view::npos : next - close - 1));
        std::int64_t k = 1;
        if (!tail.empty()) {
            if (tail.front() != '^') throw std::invalid_argument("unexpected '" + std::string(tail) + "' in basket");
            k = parse_int(tail.substr(1), tail);
            if (k < 2) throw std::invalid_argument("exponent must be >= 2 in '" + std::string(tail) + "'");
        }
        entries.emplace_back(BasketPoint(b, r), k);
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return Basket(std::move(entries));
}

std::string format_basket(const Basket& basket) {
    if (basket.empty()) return std::string(kEmptySetSymbol);
    std::string out;
    for (const auto& [point, count] : basket.entries()) {
        if (!out.empty()) out += ',';
        out += "(" + std::to_string(point.b()) + "," + std::to_string(point.r()) + ")" + power_suffix(count);
    }
    return out;
}

namespace csv {

std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += quote(fields[i]);
    }
    return out;
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote in CSV line");
    fields.push_back(std::move(current));
    return fields;
}

}  // namespace csv

}  // namespace orr
