#include "fpc/duration.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "fpc/errors.hpp"
#include "fpc/numfmt.hpp"

namespace fpc {

namespace {

// Strictly-digits parse of one H:MM:SS component.
unsigned long long parse_component(std::string_view text, const char* field,
                                   std::string_view whole) {
    if (text.empty())
        throw ParseError("duration '" + std::string(whole) + "': empty " +
                         field + " component");
    for (char c : text)
        if (c < '0' || c > '9')
            throw ParseError("duration '" + std::string(whole) + "': " + field +
                             " must be a non-negative whole number");
    unsigned long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("duration '" + std::string(whole) + "': " + field +
                         " out of range");
    return value;
}

}  // namespace

Duration::Duration(double hours) : hours_(hours) {
    if (!std::isfinite(hours) || hours < 0.0)
        throw ValidationError("duration hours must be non-negative and finite");
}

Duration Duration::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty duration");

    if (s.find(':') != std::string_view::npos) {
        const std::size_t first = s.find(':');
        const std::size_t second = s.find(':', first + 1);
        if (second == std::string_view::npos ||
            s.find(':', second + 1) != std::string_view::npos)
            throw ParseError("duration '" + std::string(s) +
                             "': expected H:MM:SS");
        const auto hours = parse_component(s.substr(0, first), "hours", s);
        const auto minutes =
            parse_component(s.substr(first + 1, second - first - 1), "minutes", s);
        const auto seconds = parse_component(s.substr(second + 1), "seconds", s);
        if (minutes >= 60)
            throw ParseError("duration '" + std::string(s) +
                             "': minutes must be below 60");
        if (seconds >= 60)
            throw ParseError("duration '" + std::string(s) +
                             "': seconds must be below 60");
        const unsigned long long total = hours * 3600ULL + minutes * 60ULL + seconds;
        return Duration(static_cast<double>(total) / 3600.0);
    }

    double value = 0.0;
    try {
        value = parse_decimal(s);
    } catch (const ParseError&) {
        throw ParseError("malformed duration '" + std::string(s) +
                         "': expected H:MM:SS or decimal hours");
    }
    if (value < 0.0)
        throw ParseError("duration '" + std::string(s) + "': hours must be non-negative");
    return Duration(value);
}

std::string Duration::to_hms() const {
    const long long total = std::llround(hours_ * 3600.0);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld:%02lld:%02lld", total / 3600,
                  (total / 60) % 60, total % 60);
    return buf;
}

}  // namespace fpc
