#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umbral {

/// Violation of a mathematical precondition (bad dimension, coordinate out of
/// range, non-invertible series, input outside an operator's domain, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected input text. `position` is 1-based character position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": expected " +
                             expected),
          position_(position), expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

} // namespace umbral
