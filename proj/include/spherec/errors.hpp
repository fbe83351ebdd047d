#ifndef SPHEREC_ERRORS_HPP
#define SPHEREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spherec {

/// Syntax error in any of the text formats, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + message),
          message_(std::move(message)), line_(line), column_(column) {}

    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// A state that is mathematically impossible unless the implementation is
/// broken (e.g. the combinatorial and Hilbert-series dimensions disagree).
/// Never signals user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& message)
        : std::logic_error("internal inconsistency: " + message) {}
};

} // namespace spherec

#endif
