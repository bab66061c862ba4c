#include "updown/equation.hpp"

#include "updown/digits.hpp"

namespace updown {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Equation parse_equation(std::string_view text) {
    Equation eq;
    eq.text.assign(text.begin(), text.end());

    std::vector<EquationTerm>* side = &eq.left;
    bool seen_equals = false;
    bool expect_term = true;  // a term must come next (start of side or after an operator)
    bool pending_negative = false;

    std::size_t i = 0;
    const std::size_t len = text.size();
    while (i < len) {
        const char c = text[i];
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        if (is_digit(c)) {
            if (!expect_term) {
                throw EquationSyntaxError("expected '+', '-' or '=' before literal at position " +
                                              std::to_string(i),
                                          i);
            }
            const std::size_t start = i;
            while (i < len && is_digit(text[i])) ++i;
            const std::size_t digits = i - start;
            if (digits > 18) {
                throw EquationSyntaxError("literal longer than 18 digits at position " +
                                              std::to_string(start),
                                          start);
            }
            side->push_back({pending_negative, std::string(text.substr(start, digits))});
            pending_negative = false;
            expect_term = false;
            continue;
        }
        if (c == '+' || c == '-') {
            if (expect_term) {
                throw EquationSyntaxError(std::string("dangling operator '") + c +
                                              "' at position " + std::to_string(i),
                                          i);
            }
            pending_negative = (c == '-');
            expect_term = true;
            ++i;
            continue;
        }
        if (c == '=') {
            if (seen_equals) {
                throw EquationSyntaxError("second '=' at position " + std::to_string(i), i);
            }
            if (expect_term) {
                throw EquationSyntaxError("left side incomplete at position " + std::to_string(i),
                                          i);
            }
            seen_equals = true;
            side = &eq.right;
            expect_term = true;
            pending_negative = false;
            ++i;
            continue;
        }
        throw EquationSyntaxError(std::string("unexpected character '") + c + "' at position " +
                                      std::to_string(i),
                                  i);
    }
    if (!seen_equals) {
        throw EquationSyntaxError("equation has no '='", len);
    }
    if (expect_term) {
        throw EquationSyntaxError("right side incomplete at position " + std::to_string(len), len);
    }
    return eq;
}

Evaluation evaluate(const Equation& eq) {
    auto sum = [](const std::vector<EquationTerm>& terms) {
        __int128 acc = 0;
        for (const auto& t : terms) {
            const std::int64_t v = value_of(t.literal);
            acc += t.negative ? -static_cast<__int128>(v) : static_cast<__int128>(v);
        }
        if (acc > INT64_MAX || acc < INT64_MIN) {
            throw Error("equation side overflows 64-bit arithmetic");
        }
        return static_cast<std::int64_t>(acc);
    };
    return {sum(eq.left), sum(eq.right)};
}

Equation rotate_equation(const Equation& eq) {
    // Report the first non-rotatable digit at its position in the original.
    for (std::size_t i = 0; i < eq.text.size(); ++i) {
        const char c = eq.text[i];
        if (is_digit(c) && !strobo_rotatable(c)) {
            throw NonRotatable(std::string("digit '") + c + "' at position " + std::to_string(i) +
                                   " has no 180-degree rotation",
                               c, i);
        }
    }
    std::string rotated;
    rotated.reserve(eq.text.size());
    for (auto it = eq.text.rbegin(); it != eq.text.rend(); ++it) {
        const char c = *it;
        if (c == ' ' || c == '\t') continue;
        rotated += is_digit(c) ? strobo_digit(c) : c;
    }
    // A reversed valid equation is again syntactically valid.
    return parse_equation(rotated);
}

EquationVerdict upside_down_verdict(std::string_view text) {
    const Equation eq = parse_equation(text);
    Equation rotated;
    try {
        rotated = rotate_equation(eq);
    } catch (const NonRotatable&) {
        return EquationVerdict::non_rotatable;
    }
    return evaluate(eq).holds() && evaluate(rotated).holds() ? EquationVerdict::valid
                                                             : EquationVerdict::invalid;
}

}  // namespace updown
