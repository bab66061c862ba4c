#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "updown/errors.hpp"

namespace updown {

/// A digit string: fixed-width, leading zeros significant ("0012" != "12").
using DigitString = std::string;

/// A sorted set of 2..10 distinct decimal digits. Square entries draw their
/// digits from such an alphabet.
class DigitAlphabet {
public:
    /// Build from e.g. "169" or "01269". Input may be unsorted; duplicates
    /// and non-digit characters are rejected.
    static DigitAlphabet parse(std::string_view text);

    int size() const { return static_cast<int>(digits_.size()); }
    char digit(int index) const { return digits_[static_cast<std::size_t>(index)]; }
    bool contains(char d) const { return index_of(d) >= 0; }
    /// Index of `d` within the alphabet, or -1 if absent.
    int index_of(char d) const;
    /// The digits in ascending order, e.g. "169".
    const std::string& digits() const { return digits_; }

    bool operator==(const DigitAlphabet&) const = default;

private:
    std::string digits_;
};

/// Numeric value of a digit string ("0169" -> 169). Width must be at most 18
/// so the value fits in 64 bits.
std::int64_t value_of(const DigitString& ds);

/// Digits that remain digits when rotated 180 degrees: 0 1 2 5 8 keep their
/// shape, 6 and 9 swap.
bool strobo_rotatable(char digit);
char strobo_digit(char digit);

/// Digits that remain digits in a mirror: 0 1 8 keep their shape, 2 and 5 swap.
bool mirrorable(char digit);
char mirror_digit(char digit);

/// Rotate a digit string 180 degrees: reverse it and rotate each digit.
/// Throws NonRotatable naming the first offending digit and its position.
DigitString strobo_digits(const DigitString& ds);

/// Mirror a digit string: reverse it and mirror each digit.
/// Throws NonMirrorable naming the first offending digit and its position.
DigitString mirror_digits(const DigitString& ds);

}  // namespace updown
