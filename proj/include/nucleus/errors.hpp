#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nucleus {

/// Operand dimensions disagree.
class SizeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (e.g. a pair that is not fixed).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A label does not name an object or attribute of the context.
class LabelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. Carries the location for diagnostics.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, std::size_t line, std::string field, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + field + ": " + what),
          file_(std::move(file)),
          line_(line),
          field_(std::move(field)) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::string file_;
    std::size_t line_;
    std::string field_;
};

}  // namespace nucleus
