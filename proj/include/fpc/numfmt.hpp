#pragma once

#include <string>
#include <string_view>

namespace fpc {

// Reporting-boundary rounding policy: half away from zero on the binary
// double, i.e. half-up for the non-negative quantities in reports.
double round_half_up(double value, int decimals);

// "1234.5678" style fixed-point text, C locale, half-up.
std::string format_fixed(double value, int decimals);

// Fixed-point text with thousands separators: "1,324,369.73".
std::string format_grouped(double value, int decimals);

// Shortest decimal text that round-trips the double exactly (std::to_chars).
std::string format_shortest(double value);

// Strict double parse: entire string must be consumed, '.' separator,
// finite result. Throws ParseError.
double parse_decimal(std::string_view text);

// "5,13" -> "5.13" for sheets using a comma decimal separator. Only applies
// to fields shaped like <digits>,<digits>; anything else passes through.
std::string normalize_decimal_comma(std::string_view field);

std::string_view trim(std::string_view text);
std::string to_lower(std::string_view text);

// Lookup-key canonicalization for table names: lower case, spaces and
// hyphens collapsed to '_'.
std::string normalize_key(std::string_view name);

}  // namespace fpc
