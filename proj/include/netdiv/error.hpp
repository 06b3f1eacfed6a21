#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netdiv {

// Base class for all domain errors raised by the library. CLI maps these to
// exit code 1 with a single-line message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class EmptyGraphError : public Error {
public:
    explicit EmptyGraphError(const std::string& msg) : Error(msg) {}
};

class UndefinedBaselineError : public Error {
public:
    explicit UndefinedBaselineError(const std::string& msg) : Error(msg) {}
};

class UndefinedCorrelationError : public Error {
public:
    explicit UndefinedCorrelationError(const std::string& msg) : Error(msg) {}
};

class SingularDesignError : public Error {
public:
    explicit SingularDesignError(const std::string& msg) : Error(msg) {}
};

}  // namespace netdiv
