#include "updown/digits.hpp"

#include <algorithm>

namespace updown {

DigitAlphabet DigitAlphabet::parse(std::string_view text) {
    DigitAlphabet a;
    a.digits_.assign(text.begin(), text.end());
    std::sort(a.digits_.begin(), a.digits_.end());
    for (char d : a.digits_) {
        if (d < '0' || d > '9') {
            throw Error(std::string("alphabet contains non-digit character '") + d + "'");
        }
    }
    if (std::adjacent_find(a.digits_.begin(), a.digits_.end()) != a.digits_.end()) {
        throw Error("alphabet contains duplicate digits: " + a.digits_);
    }
    if (a.size() < 2 || a.size() > 10) {
        throw Error("alphabet must have 2..10 digits, got " + std::to_string(a.size()));
    }
    return a;
}

int DigitAlphabet::index_of(char d) const {
    auto pos = digits_.find(d);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

std::int64_t value_of(const DigitString& ds) {
    if (ds.empty() || ds.size() > 18) {
        throw Error("digit string must have 1..18 digits, got \"" + ds + "\"");
    }
    std::int64_t v = 0;
    for (char d : ds) {
        if (d < '0' || d > '9') {
            throw Error(std::string("digit string contains non-digit character '") + d + "'");
        }
        v = v * 10 + (d - '0');
    }
    return v;
}

bool strobo_rotatable(char digit) {
    switch (digit) {
        case '0': case '1': case '2': case '5': case '6': case '8': case '9':
            return true;
        default:
            return false;
    }
}

char strobo_digit(char digit) {
    if (digit == '6') return '9';
    if (digit == '9') return '6';
    return digit;
}

bool mirrorable(char digit) {
    switch (digit) {
        case '0': case '1': case '2': case '5': case '8':
            return true;
        default:
            return false;
    }
}

char mirror_digit(char digit) {
    if (digit == '2') return '5';
    if (digit == '5') return '2';
    return digit;
}

DigitString strobo_digits(const DigitString& ds) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!strobo_rotatable(ds[i])) {
            throw NonRotatable(std::string("digit '") + ds[i] + "' at position " +
                                   std::to_string(i) + " of \"" + ds + "\" has no 180-degree rotation",
                               ds[i], i);
        }
    }
    DigitString out(ds.rbegin(), ds.rend());
    for (char& d : out) d = strobo_digit(d);
    return out;
}

DigitString mirror_digits(const DigitString& ds) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!mirrorable(ds[i])) {
            throw NonMirrorable(std::string("digit '") + ds[i] + "' at position " +
                                    std::to_string(i) + " of \"" + ds + "\" has no mirror image",
                                ds[i], i);
        }
    }
    DigitString out(ds.rbegin(), ds.rend());
    for (char& d : out) d = mirror_digit(d);
    return out;
}

}  // namespace updown
