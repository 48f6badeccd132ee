// Canonical text forms shared by fixtures and the command-line tool.
//
//   index multiset   2^3,4,7,9          (ascending r, exponent when multiplicity >= 2)
//   basket           (1,2)^3,(1,4),(2,7)
//   empty multiset   ∅ on output; "" or ∅ on input
//
// Parsers throw std::invalid_argument with a message naming the bad term.

#pragma once

#include "orr/riemann_roch.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orr {

inline constexpr std::string_view kEmptySetSymbol = "∅";

IndexMultiset parse_index_multiset(std::string_view text);
std::string format_index_multiset(const IndexMultiset& indices);

Basket parse_basket(std::string_view text);
std::string format_basket(const Basket& basket);

std::string_view trim(std::string_view text);

namespace csv {

/// Quotes the field when it contains a comma, quote or line break.
std::string quote(std::string_view field);
std::string join(const std::vector<std::string>& fields);
/// Splits one CSV line; throws std::invalid_argument on an unterminated quote.
std::vector<std::string> split(std::string_view line);

}  // namespace csv

}  // namespace orr
