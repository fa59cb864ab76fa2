#include "fpc/csv.hpp"

#include "fpc/errors.hpp"
#include "fpc/numfmt.hpp"

namespace fpc {

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        // Skip whitespace ahead of a possible opening quote.
        std::size_t start = pos;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t'))
            ++start;

        if (start < line.size() && line[start] == '"') {
            std::string field;
            std::size_t i = start + 1;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field += '"';
                        i += 2;
                        continue;
                    }
                    closed = true;
                    ++i;
                    break;
                }
                field += line[i];
                ++i;
            }
            if (!closed) throw ParseError("unterminated quote in CSV field");
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i < line.size() && line[i] != ',')
                throw ParseError("unexpected text after closing quote in CSV field");
            fields.push_back(std::move(field));
            if (i >= line.size()) break;
            pos = i + 1;
        } else {
            const std::size_t comma = line.find(',', pos);
            if (comma == std::string_view::npos) {
                fields.emplace_back(trim(line.substr(pos)));
                break;
            }
            fields.emplace_back(trim(line.substr(pos, comma - pos)));
            pos = comma + 1;
        }
    }
    return fields;
}

std::vector<CsvRow> parse_csv(std::string_view text) {
    std::vector<CsvRow> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!trim(line).empty()) rows.push_back({line_no, split_csv_line(line)});
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return rows;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace fpc
