#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathrisk {

/// Malformed input text. Carries the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A value lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Not enough observations for the requested window or statistic.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Input is well-formed but carries no information (e.g. an all-zero lag vector).
class DegenerateInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inconsistent experiment configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace pathrisk
