#pragma once

#include <stdexcept>
#include <string>

namespace fdia {

/// Malformed input text (case files, CSV, config). Carries line/column when known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = -1, int column = -1)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line < 0) return msg;
        std::string s = msg + " (line " + std::to_string(line);
        if (column >= 0) s += ", column " + std::to_string(column);
        return s + ")";
    }
    int line_;
    int column_;
};

/// Structurally well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File system / serialization failures (missing files, truncated blobs, bad magic).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fdia
