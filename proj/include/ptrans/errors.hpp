#pragma once

#include <stdexcept>
#include <string>

namespace ptrans {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad files, weight mismatches, empty sets,
/// unmet preconditions. The CLI maps these to exit status 1.
class InputError : public Error {
public:
    using Error::Error;
};

/// Parse failure with a position inside the offending text.
class ParseError : public InputError {
public:
    ParseError(int line, int column, const std::string& what)
        : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A configured work budget or enumeration cap was exhausted (exit status 2).
class BudgetError : public Error {
public:
    using Error::Error;
};

/// A mathematical identity that must hold did not; always a bug (exit status 3).
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace ptrans
