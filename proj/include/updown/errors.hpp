#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace updown {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A digit (or a square cell containing one) has no 180-degree rotation.
/// `row`/`col` are -1 when the error refers to a bare digit string.
struct NonRotatable : Error {
    NonRotatable(std::string msg, char digit, std::size_t position, int row = -1, int col = -1)
        : Error(std::move(msg)), digit(digit), position(position), row(row), col(col) {}
    char digit;
    std::size_t position;
    int row;
    int col;
};

/// A digit (or a square cell containing one) has no mirror image.
struct NonMirrorable : Error {
    NonMirrorable(std::string msg, char digit, std::size_t position, int row = -1, int col = -1)
        : Error(std::move(msg)), digit(digit), position(position), row(row), col(col) {}
    char digit;
    std::size_t position;
    int row;
    int col;
};

/// Expected sums do not divide evenly across the square's lines.
struct NotDivisible : Error {
    using Error::Error;
};

/// The requested operation is defined, but not for these parameters.
struct Unsupported : Error {
    using Error::Error;
};

/// A line family does not exist for the given square shape.
struct BadFamily : Error {
    using Error::Error;
};

/// The construction search ran to completion without an acceptable candidate.
struct SearchExhausted : Error {
    using Error::Error;
};

/// A square file failed to parse; `line` is 1-based.
struct SquareParseError : Error {
    SquareParseError(std::string msg, int line) : Error(std::move(msg)), line(line) {}
    int line;
};

/// An equation failed to parse; `position` is a 0-based index into the input text.
struct EquationSyntaxError : Error {
    EquationSyntaxError(std::string msg, std::size_t position)
        : Error(std::move(msg)), position(position) {}
    std::size_t position;
};

}  // namespace updown
