#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wlcs {

/// Syntax error in a text format, with 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Semantic error in otherwise well-formed input (row sums, threshold range, ...).
/// Collects every violation found, not just the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& vs) {
        std::string out = "invalid instance:";
        for (const auto& v : vs) {
            out += "\n  ";
            out += v;
        }
        return out;
    }
    std::vector<std::string> violations_;
};

/// An exact search refused to start (or continue) because its configured work
/// bound would be exceeded. Never raised mid-way through a partial answer.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A witness whose shape does not fit the instance (lengths, ranges, letters).
class WitnessShapeError : public std::invalid_argument {
public:
    explicit WitnessShapeError(std::vector<std::string> violations)
        : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& vs) {
        std::string out = "malformed witness:";
        for (const auto& v : vs) {
            out += "\n  ";
            out += v;
        }
        return out;
    }
    std::vector<std::string> violations_;
};

}  // namespace wlcs
