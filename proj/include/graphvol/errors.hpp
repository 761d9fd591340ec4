#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace graphvol {

// Base for all domain errors. `code` is a stable machine-readable tag used in
// CLI output lines of the form `ERROR <code>: <message>`.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Text-input failure with a 1-based source location.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column = 0)
        : Error("parse", format(message, line, column)), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, int line, int column) {
        std::string s = "line " + std::to_string(line);
        if (column > 0) s += ", column " + std::to_string(column);
        return s + ": " + message;
    }

    int line_;
    int column_;
};

} // namespace graphvol
