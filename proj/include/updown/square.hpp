#pragma once

#include <vector>

#include "updown/digits.hpp"

namespace updown {

/// An order-N square of fixed-width digit strings over a digit alphabet.
/// Cells are stored row-major.
struct Square {
    DigitAlphabet alphabet;
    int order = 0;
    int width = 0;
    std::vector<DigitString> cells;

    /// Validate and assemble. Every cell must have exactly `width` digits,
    /// all drawn from `alphabet`.
    static Square make(DigitAlphabet alphabet, int order, int width,
                       std::vector<DigitString> cells);

    const DigitString& at(int row, int col) const {
        return cells[static_cast<std::size_t>(row) * order + col];
    }
    DigitString& at(int row, int col) {
        return cells[static_cast<std::size_t>(row) * order + col];
    }

    bool operator==(const Square&) const = default;
};

/// True when the square holds every width-length string over its alphabet
/// exactly once (possible only when order^2 == alphabet_size^width).
bool combination_complete(const Square& sq);

/// True when every digit of every cell (and of the alphabet) rotates.
bool rotatable(const Square& sq);

/// True when every digit of every cell (and of the alphabet) mirrors.
bool mirrorable(const Square& sq);

/// Rotate the whole square 180 degrees: cell (i,j) of the result is the
/// rotated cell (N-1-i, N-1-j) of the input. The result's alphabet is the
/// rotated image of the input's. Throws NonRotatable carrying the first
/// offending cell in reading order.
Square rotate180(const Square& sq);

/// Mirror the square left-right: cell (i,j) of the result is the mirrored
/// cell (i, N-1-j) of the input. Throws NonMirrorable likewise.
Square mirror_square(const Square& sq);

/// True when the square rotates onto itself cell-for-cell. Stronger than any
/// property-closure check and rarely attainable; offered for exploration.
bool rotation_fixed_point(const Square& sq);

}  // namespace updown
