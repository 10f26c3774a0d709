#pragma once

#include <stdexcept>
#include <string>

namespace fraccover {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class NotReducedError : public Error {
public:
    using Error::Error;
};

// Raised when a construction that should be impossible for inputs produced by
// this library is observed (e.g. a vertex of U with no incident LP variable).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace fraccover
