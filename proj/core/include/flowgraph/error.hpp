// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace flowgraph {

// Data or runtime failure (bad file contents, unmet precondition on data).
// Maps to exit code 1 in the CLI.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A record-level problem tied to a specific line of an input file.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " at line " + std::to_string(line)), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Invalid configuration or arguments. Maps to exit code 2 in the CLI.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace flowgraph
