#pragma once

#include <stdexcept>
#include <string>

namespace zap {

// Base of everything the library throws on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed document. `path` is a JSON pointer to the offending field
/// (empty for syntax errors, in which case `line` is set).
class ParseError : public Error {
public:
    ParseError(std::string path, const std::string& what, int line = 0)
        : Error(format(path, what, line)), path_(std::move(path)), line_(line) {}

    const std::string& path() const noexcept { return path_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& path, const std::string& what, int line) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!path.empty()) out += path + ": ";
        return out + what;
    }

    std::string path_;
    int line_ = 0;
};

/// A vertex or edge id that does not exist.
class ReferenceError : public Error {
public:
    using Error::Error;
};

/// A general-mode weight needed by a formula was not supplied.
class MissingWeightError : public Error {
public:
    using Error::Error;
};

/// Parameter outside an operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An incidence structure that is not a good Zappatic configuration.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

}  // namespace zap
