#pragma once

#include <string>

#include "updown/digits.hpp"
#include "updown/square.hpp"

namespace updown {

/// Which of the seven display segments a digit lights, as a bitmask:
/// bit 0..6 = segments a (top bar), b (upper right), c (lower right),
/// d (bottom bar), e (lower left), f (upper left), g (middle bar).
int segment_mask(char digit);

enum : int {
    kSegA = 1 << 0,
    kSegB = 1 << 1,
    kSegC = 1 << 2,
    kSegD = 1 << 3,
    kSegE = 1 << 4,
    kSegF = 1 << 5,
    kSegG = 1 << 6,
};

/// `mask` after physically rotating the display 180 degrees
/// (a<->d, b<->e, c<->f).
int rotate_segment_mask(int mask);

/// `mask` after reflecting the display left-right (b<->f, c<->e).
int mirror_segment_mask(int mask);

/// Draw a digit string as seven-segment ASCII art, '_' for horizontal bars
/// and '|' for vertical ones. Each digit occupies (2*scale+1) text rows and
/// (scale+2) columns; digits are separated by one column of spaces. Lines
/// carry no trailing blanks and the result ends with a newline.
std::string render_seven_segment(const DigitString& ds, int scale = 1);

/// Draw a whole square: cells in a row are separated by three columns of
/// spaces, square rows by one blank line.
std::string render_seven_segment(const Square& sq, int scale = 1);

}  // namespace updown
