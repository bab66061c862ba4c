#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "updown/errors.hpp"

namespace updown {

/// One signed literal of an equation side. The literal keeps its exact
/// digits; leading zeros are significant.
struct EquationTerm {
    bool negative = false;
    std::string literal;
    bool operator==(const EquationTerm&) const = default;
};

/// A two-sided sum/difference equation over digit literals, e.g.
/// "69 + 11 = 80". Whitespace between tokens is ignored but error positions
/// always refer to the original text.
struct Equation {
    std::string text;  // original input
    std::vector<EquationTerm> left, right;
};

/// Parse `side (+|-) side ... = side ...`. Throws EquationSyntaxError with
/// the 0-based offset of the offending character.
Equation parse_equation(std::string_view text);

/// Exact integer value of each side.
struct Evaluation {
    std::int64_t left = 0;
    std::int64_t right = 0;
    bool holds() const { return left == right; }
};
Evaluation evaluate(const Equation& eq);

/// The equation as read after rotating the page 180 degrees: the character
/// sequence (whitespace dropped) reverses, digits rotate, '+', '-' and '='
/// keep their shape. Throws NonRotatable with the offending digit and its
/// 0-based position in the original text.
Equation rotate_equation(const Equation& eq);

/// How an equation relates to its upside-down reading.
enum class EquationVerdict {
    valid,          // holds right side up and upside down
    invalid,        // parses and rotates, but one of the readings fails
    non_rotatable,  // contains a digit with no 180-degree rotation
};

/// Parse, evaluate, rotate and evaluate again. Syntax errors propagate.
EquationVerdict upside_down_verdict(std::string_view text);

}  // namespace updown
