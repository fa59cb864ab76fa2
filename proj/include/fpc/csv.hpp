#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fpc {

struct CsvRow {
    std::size_t line_no = 0;  // 1-based line number in the source text
    std::vector<std::string> fields;
};

// Splits one line into fields. Double-quoted fields may contain commas and
// doubled quotes; unquoted fields are trimmed. Throws ParseError on an
// unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line);

// Parses a whole document, skipping blank lines. No multi-line fields.
std::vector<CsvRow> parse_csv(std::string_view text);

// Quotes a field for CSV output when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

}  // namespace fpc
