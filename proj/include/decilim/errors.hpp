#ifndef DECILIM_ERRORS_HPP
#define DECILIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace decilim {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input text; `position` is a 0-based offset into the source string.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Predicted coefficient size exceeds the configured bit budget.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

// Invalid argument for the operation (zero polynomial, bad N, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

} // namespace decilim

#endif
