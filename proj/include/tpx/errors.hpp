#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpx {

// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input that parses but violates a structural invariant (self-loop, duplicate edge, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Index outside the valid range of a container (vertex id, face index, ...).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Caller supplied an unusable parameter value.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal invariant was found broken, e.g. a non-monotone weight function.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tpx
