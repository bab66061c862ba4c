#include "updown/square.hpp"

#include <algorithm>

namespace updown {

Square Square::make(DigitAlphabet alphabet, int order, int width,
                    std::vector<DigitString> cells) {
    if (order < 1) {
        throw Error("square order must be positive, got " + std::to_string(order));
    }
    if (width < 1) {
        throw Error("cell width must be positive, got " + std::to_string(width));
    }
    if (cells.size() != static_cast<std::size_t>(order) * order) {
        throw Error("expected " + std::to_string(order * order) + " cells, got " +
                    std::to_string(cells.size()));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const DigitString& cell = cells[i];
        if (static_cast<int>(cell.size()) != width) {
            throw Error("cell (" + std::to_string(i / order) + "," + std::to_string(i % order) +
                        ") \"" + cell + "\" does not have width " + std::to_string(width));
        }
        for (char d : cell) {
            if (!alphabet.contains(d)) {
                throw Error("cell (" + std::to_string(i / order) + "," +
                            std::to_string(i % order) + ") \"" + cell + "\" uses digit '" + d +
                            "' outside alphabet " + alphabet.digits());
            }
        }
    }
    Square sq;
    sq.alphabet = std::move(alphabet);
    sq.order = order;
    sq.width = width;
    sq.cells = std::move(cells);
    return sq;
}

bool combination_complete(const Square& sq) {
    // order^2 == n^width, computed without overflow for realistic sizes.
    long long combos = 1;
    for (int i = 0; i < sq.width; ++i) {
        combos *= sq.alphabet.size();
        if (combos > static_cast<long long>(sq.order) * sq.order) return false;
    }
    if (combos != static_cast<long long>(sq.order) * sq.order) return false;
    // With the count right, distinctness forces every combination to appear.
    std::vector<DigitString> sorted = sq.cells;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool rotatable(const Square& sq) {
    return std::all_of(sq.alphabet.digits().begin(), sq.alphabet.digits().end(),
                       [](char d) { return strobo_rotatable(d); });
}

bool mirrorable(const Square& sq) {
    return std::all_of(sq.alphabet.digits().begin(), sq.alphabet.digits().end(),
                       [](char d) { return updown::mirrorable(d); });
}

namespace {

// Find the first cell in reading order containing a digit the transform
// rejects, and rethrow the digit-level error with cell coordinates attached.
template <typename Pred, typename MakeError>
void require_all_cells(const Square& sq, Pred digit_ok, MakeError make_error) {
    for (int r = 0; r < sq.order; ++r) {
        for (int c = 0; c < sq.order; ++c) {
            const DigitString& cell = sq.at(r, c);
            for (std::size_t i = 0; i < cell.size(); ++i) {
                if (!digit_ok(cell[i])) throw make_error(cell, cell[i], i, r, c);
            }
        }
    }
}

}  // namespace

Square rotate180(const Square& sq) {
    require_all_cells(
        sq, strobo_rotatable,
        [](const DigitString& cell, char d, std::size_t i, int r, int c) {
            return NonRotatable("cell (" + std::to_string(r) + "," + std::to_string(c) + ") \"" +
                                    cell + "\": digit '" + d + "' has no 180-degree rotation",
                                d, i, r, c);
        });
    std::string mapped;
    for (char d : sq.alphabet.digits()) {
        if (!strobo_rotatable(d)) {
            throw NonRotatable(std::string("alphabet digit '") + d +
                                   "' has no 180-degree rotation",
                               d, 0);
        }
        mapped += strobo_digit(d);
    }
    const int n = sq.order;
    std::vector<DigitString> cells(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            cells[static_cast<std::size_t>(r) * n + c] = strobo_digits(sq.at(n - 1 - r, n - 1 - c));
        }
    }
    return Square::make(DigitAlphabet::parse(mapped), n, sq.width, std::move(cells));
}

Square mirror_square(const Square& sq) {
    require_all_cells(
        sq, [](char d) { return mirrorable(d); },
        [](const DigitString& cell, char d, std::size_t i, int r, int c) {
            return NonMirrorable("cell (" + std::to_string(r) + "," + std::to_string(c) + ") \"" +
                                     cell + "\": digit '" + d + "' has no mirror image",
                                 d, i, r, c);
        });
    std::string mapped;
    for (char d : sq.alphabet.digits()) {
        if (!mirrorable(d)) {
            throw NonMirrorable(std::string("alphabet digit '") + d + "' has no mirror image", d,
                                0);
        }
        mapped += mirror_digit(d);
    }
    const int n = sq.order;
    std::vector<DigitString> cells(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            cells[static_cast<std::size_t>(r) * n + c] = mirror_digits(sq.at(r, n - 1 - c));
        }
    }
    return Square::make(DigitAlphabet::parse(mapped), n, sq.width, std::move(cells));
}

bool rotation_fixed_point(const Square& sq) {
    return rotatable(sq) && rotate180(sq) == sq;
}

}  // namespace updown
