#pragma once

#include <stdexcept>
#include <string>

namespace resband {

// Bad user input: malformed files, out-of-range parameters, invalid names.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line = 0, int column = 0)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line <= 0) return msg;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
    }
    int line_, column_;
};

// A mathematical invariant failed to hold. Reaching this is a bug, never
// a consequence of bad input; the CLI maps it to a distinct exit code.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace resband
