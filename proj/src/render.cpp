#include "updown/render.hpp"

#include <vector>

namespace updown {

int segment_mask(char digit) {
    switch (digit) {
        case '0': return kSegA | kSegB | kSegC | kSegD | kSegE | kSegF;
        case '1': return kSegB | kSegC;
        case '2': return kSegA | kSegB | kSegG | kSegE | kSegD;
        case '3': return kSegA | kSegB | kSegG | kSegC | kSegD;
        case '4': return kSegF | kSegG | kSegB | kSegC;
        case '5': return kSegA | kSegF | kSegG | kSegC | kSegD;
        case '6': return kSegA | kSegF | kSegG | kSegE | kSegD | kSegC;
        case '7': return kSegA | kSegB | kSegC;
        case '8': return kSegA | kSegB | kSegC | kSegD | kSegE | kSegF | kSegG;
        case '9': return kSegA | kSegB | kSegC | kSegD | kSegF | kSegG;
        default:
            throw Error(std::string("no seven-segment glyph for character '") + digit + "'");
    }
}

int rotate_segment_mask(int mask) {
    int out = mask & kSegG;
    if (mask & kSegA) out |= kSegD;
    if (mask & kSegD) out |= kSegA;
    if (mask & kSegB) out |= kSegE;
    if (mask & kSegE) out |= kSegB;
    if (mask & kSegC) out |= kSegF;
    if (mask & kSegF) out |= kSegC;
    return out;
}

int mirror_segment_mask(int mask) {
    int out = mask & (kSegA | kSegD | kSegG);
    if (mask & kSegB) out |= kSegF;
    if (mask & kSegF) out |= kSegB;
    if (mask & kSegC) out |= kSegE;
    if (mask & kSegE) out |= kSegC;
    return out;
}

namespace {

// Paint one digit into a (2*scale+1) x (scale+2) character block.
std::vector<std::string> glyph(char digit, int scale) {
    const int rows = 2 * scale + 1;
    const int cols = scale + 2;
    const int mask = segment_mask(digit);
    std::vector<std::string> block(rows, std::string(cols, ' '));
    auto hbar = [&](int row) {
        for (int c = 1; c <= scale; ++c) block[row][c] = '_';
    };
    auto vbar = [&](int top, int col) {
        for (int r = top; r < top + scale; ++r) block[r][col] = '|';
    };
    if (mask & kSegA) hbar(0);
    if (mask & kSegG) hbar(scale);
    if (mask & kSegD) hbar(2 * scale);
    if (mask & kSegF) vbar(1, 0);
    if (mask & kSegB) vbar(1, scale + 1);
    if (mask & kSegE) vbar(scale + 1, 0);
    if (mask & kSegC) vbar(scale + 1, scale + 1);
    return block;
}

void rstrip(std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
}

// Render a list of digit strings side by side; `gap` spaces between strings,
// one space between digits within a string.
std::vector<std::string> render_row(const std::vector<DigitString>& items, int scale, int gap) {
    const int rows = 2 * scale + 1;
    std::vector<std::string> lines(rows);
    for (std::size_t item = 0; item < items.size(); ++item) {
        if (item > 0) {
            for (auto& line : lines) line.append(static_cast<std::size_t>(gap), ' ');
        }
        for (std::size_t pos = 0; pos < items[item].size(); ++pos) {
            auto block = glyph(items[item][pos], scale);
            for (int r = 0; r < rows; ++r) {
                if (pos > 0) lines[r] += ' ';
                lines[r] += block[r];
            }
        }
    }
    for (auto& line : lines) rstrip(line);
    return lines;
}

}  // namespace

std::string render_seven_segment(const DigitString& ds, int scale) {
    if (scale < 1) throw Error("render scale must be positive");
    std::string out;
    for (const auto& line : render_row({ds}, scale, 0)) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_seven_segment(const Square& sq, int scale) {
    if (scale < 1) throw Error("render scale must be positive");
    std::string out;
    for (int r = 0; r < sq.order; ++r) {
        if (r > 0) out += '\n';
        std::vector<DigitString> row(sq.cells.begin() + static_cast<std::size_t>(r) * sq.order,
                                     sq.cells.begin() + static_cast<std::size_t>(r + 1) * sq.order);
        for (const auto& line : render_row(row, scale, 3)) {
            out += line;
            out += '\n';
        }
    }
    return out;
}

}  // namespace updown
