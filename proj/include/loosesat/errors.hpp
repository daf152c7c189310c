#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loosesat {

/// Invalid argument: out-of-range vertex, malformed triple, duplicate edge, bad parameter.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was invoked on a graph that lacks a required certified property
/// (saturation or triangle-freeness).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed .h3 text. Carries 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A search budget (wall clock or node count) ran out before the answer was proven.
/// `exhausted_upto` is the largest edge count proven infeasible, or -1 if none.
class TimeoutError : public std::runtime_error {
public:
    TimeoutError(const std::string& msg, long exhausted_upto = -1)
        : std::runtime_error(msg), exhausted_upto_(exhausted_upto) {}

    long exhausted_upto() const noexcept { return exhausted_upto_; }

private:
    long exhausted_upto_;
};

}  // namespace loosesat
