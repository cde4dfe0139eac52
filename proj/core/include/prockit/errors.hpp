#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace prockit {

/// Base class for all prockit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file content. Carries the offending path and 1-based line.
struct ParseError : Error {
    ParseError(std::string path_, std::size_t line_, const std::string& what_)
        : Error(path_ + ":" + std::to_string(line_) + ": " + what_),
          path(std::move(path_)),
          line(line_) {}

    std::string path;
    std::size_t line;
};

/// Raised when an operation refuses input that fails corpus validation.
/// The formatted message lists every violation.
struct ValidationError : Error {
    ValidationError(std::string what_, std::vector<std::string> violations_)
        : Error(std::move(what_)), violations(std::move(violations_)) {}

    std::vector<std::string> violations;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace prockit
