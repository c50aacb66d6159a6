#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spbvp {

/// Invalid argument or violated precondition (bad N, nonpositive ε, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Unknown built-in problem name.
class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A coefficient or expression could not be evaluated to a finite value.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Singular pivot, non-finite state during integration, and similar.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression syntax error at a 0-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace spbvp
