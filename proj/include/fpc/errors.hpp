#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fpc {

// Base of the library's exception hierarchy. The CLI maps ParseError and
// IoError to exit code 2, everything else to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (bad duration syntax, broken CSV, invalid JSON).
struct ParseError : Error {
    using Error::Error;
};

// Unreadable or unwritable files.
struct IoError : Error {
    using Error::Error;
};

// Structurally valid input that violates a domain invariant.
struct ValidationError : Error {
    using Error::Error;
};

// A value outside an operation's mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

// A name that does not resolve against a loaded table.
struct LookupError : Error {
    using Error::Error;
};

enum class IssueKind { parse, validation };

// One collected loader diagnostic. `row` is the 1-based line number in the
// source file; 0 means the issue is not tied to a particular line.
struct LoadIssue {
    std::size_t row = 0;
    IssueKind kind = IssueKind::validation;
    std::string message;

    std::string to_string() const {
        if (row == 0) return message;
        return "row " + std::to_string(row) + ": " + message;
    }
};

inline bool any_parse_issue(const std::vector<LoadIssue>& issues) {
    for (const auto& issue : issues)
        if (issue.kind == IssueKind::parse) return true;
    return false;
}

// Joins all issues into one message and throws the matching exception type.
// No-op when the list is empty.
inline void throw_if_issues(const std::vector<LoadIssue>& issues) {
    if (issues.empty()) return;
    std::string joined;
    for (const auto& issue : issues) {
        if (!joined.empty()) joined += '\n';
        joined += issue.to_string();
    }
    if (any_parse_issue(issues)) throw ParseError(joined);
    throw ValidationError(joined);
}

}  // namespace fpc
