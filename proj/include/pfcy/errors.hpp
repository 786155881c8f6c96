#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfcy {

/// Malformed or inconsistent input: shape mismatches, field mismatches,
/// invalid factorizations.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold (division by zero, pole at a
/// node, inadmissible arrangement, singular system).
class math_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal invariant failed. Always a bug.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Text that does not match the polynomial grammar. Line and column are
/// 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace pfcy
