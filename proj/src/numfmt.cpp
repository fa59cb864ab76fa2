#include "fpc/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "fpc/errors.hpp"

namespace fpc {

namespace {

double pow10i(int n) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= 10.0;
    return v;
}

}  // namespace

double round_half_up(double value, int decimals) {
    const double scale = pow10i(decimals);
    return static_cast<double>(std::llround(value * scale)) / scale;
}

std::string format_fixed(double value, int decimals) {
    const double scale = pow10i(decimals);
    long long scaled = std::llround(value * scale);
    const bool negative = scaled < 0;
    unsigned long long magnitude =
        negative ? 0ULL - static_cast<unsigned long long>(scaled)
                 : static_cast<unsigned long long>(scaled);

    std::string digits = std::to_string(magnitude);
    if (decimals > 0 && digits.size() <= static_cast<std::size_t>(decimals))
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');

    std::string out;
    if (negative) out += '-';
    if (decimals == 0) {
        out += digits;
    } else {
        out += digits.substr(0, digits.size() - decimals);
        out += '.';
        out += digits.substr(digits.size() - decimals);
    }
    return out;
}

std::string format_grouped(double value, int decimals) {
    std::string fixed = format_fixed(value, decimals);
    const std::size_t start = fixed.starts_with('-') ? 1 : 0;
    std::size_t int_end = fixed.find('.');
    if (int_end == std::string::npos) int_end = fixed.size();

    std::string out = fixed.substr(0, start);
    const std::size_t int_len = int_end - start;
    for (std::size_t i = 0; i < int_len; ++i) {
        if (i != 0 && (int_len - i) % 3 == 0) out += ',';
        out += fixed[start + i];
    }
    out += fixed.substr(int_end);
    return out;
}

std::string format_shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

double parse_decimal(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty number");
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("malformed number '" + std::string(text) + "'");
    if (!std::isfinite(value))
        throw ParseError("non-finite number '" + std::string(text) + "'");
    return value;
}

std::string normalize_decimal_comma(std::string_view field) {
    const std::string_view s = trim(field);
    const std::size_t comma = s.find(',');
    if (comma == std::string_view::npos || comma == 0 || comma + 1 == s.size())
        return std::string(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == comma) continue;
        if (s[i] < '0' || s[i] > '9') return std::string(s);
    }
    std::string out(s);
    out[comma] = '.';
    return out;
}

std::string_view trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && (text[begin] == ' ' || text[begin] == '\t' ||
                           text[begin] == '\r' || text[begin] == '\n'))
        ++begin;
    while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t' ||
                           text[end - 1] == '\r' || text[end - 1] == '\n'))
        --end;
    return text.substr(begin, end - begin);
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

std::string normalize_key(std::string_view name) {
    std::string out = to_lower(trim(name));
    for (char& c : out)
        if (c == ' ' || c == '-') c = '_';
    return out;
}

}  // namespace fpc
