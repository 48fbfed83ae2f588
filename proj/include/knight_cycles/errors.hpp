#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace knight_cycles {

// Out-of-range coordinates, indices or lengths.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class ValidationFault {
    odd_length,
    too_short,
    out_of_range,
    duplicate_cell,
    not_a_knight_move,
    open_endpoints,
};

const char* to_string(ValidationFault fault);

// A cell sequence that is not a closed knight cycle. `position` is the
// 0-based index of the first offending element.
class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationFault fault, std::size_t position, const std::string& what)
        : std::runtime_error(what), fault_(fault), position_(position) {}

    [[nodiscard]] ValidationFault fault() const noexcept { return fault_; }
    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    ValidationFault fault_;
    std::size_t position_;
};

// Malformed cycle file; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace knight_cycles
