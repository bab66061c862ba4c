#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "updown/square.hpp"

namespace updown {

/// First- and second-power sums of one line of cells.
struct SumPair {
    std::int64_t s1 = 0;  // sum of cell values
    std::int64_t s2 = 0;  // sum of squared cell values
    bool operator==(const SumPair&) const = default;
};

/// The families of cell lines a square can be checked along.
///   rows / cols        N lines of N cells
///   main_diag          1 line: (i, i)
///   anti_diag          1 line: (i, N-1-i)
///   broken_diags       2N lines: offsets 0..N-1 running down-right
///                      ((i, (i+o) mod N), indices 0..N-1), then offsets
///                      0..N-1 running down-left ((i, (o-i) mod N),
///                      indices N..2N-1)
///   blocks             N aligned sqrt(N) x sqrt(N) blocks in reading order
///                      (only when N is a perfect square)
///   grid               1 line: all N^2 cells
enum class LineFamily { rows, cols, main_diag, anti_diag, broken_diags, blocks, grid };

/// The cell lines of a family as lists of row-major cell indices.
/// Throws BadFamily when the family does not exist for this order
/// (blocks of a non-square order).
std::vector<std::vector<int>> family_lines(int order, LineFamily family);

/// S1/S2 sums of every line in the family, in family order.
std::vector<SumPair> line_profile(const Square& sq, LineFamily family);

/// The S1/S2 every line must carry if all alphabet^width strings spread
/// evenly over the square's lines: total over all strings, divided by the
/// order. Throws NotDivisible when either total does not divide evenly, and
/// Unsupported when the enumeration would be impractical
/// (alphabet_size^width > 10^6) or the order does not divide the string count.
SumPair expected_sums(const DigitAlphabet& alphabet, int width, int order);

/// True when, in every line of the family, each alphabet digit appears the
/// same number of times at each digit position (line_length / alphabet_size
/// times). Balance forces equal S1 on all lines of the family.
bool check_balance(const Square& sq, LineFamily family);

/// True when, in every line of the family, each ordered pair of digit
/// positions takes each ordered pair of digit values exactly once.
/// Defined for four-digit squares of order alphabet_size^2 on families whose
/// lines have N cells; throws Unsupported otherwise. Pair-orthogonality on
/// rows and columns forces equal S2 (bimagic behaviour) on them.
bool check_pair_orthogonality(const Square& sq, LineFamily family);

/// One line whose sums deviate from the square's consensus.
struct LineFailure {
    std::string family;  // "row", "col", "diag", "antidiag", "block"
    int index = 0;
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
    bool operator==(const LineFailure&) const = default;
};

/// Sums of a transformed square; each present only at the level the
/// transformed square actually reaches (s1 if semi-magic, s2 if bimagic).
struct SumReport {
    std::optional<std::int64_t> s1;
    std::optional<std::int64_t> s2;
};

/// Everything classify() can determine about one square.
struct PropertyReport {
    std::optional<std::int64_t> s1;  // common row/col sum, present iff semi_magic
    std::optional<std::int64_t> s2;  // common squared sum, present iff bimagic

    bool semi_magic = false;          // all rows and columns share S1
    bool magic = false;               // semi_magic and both diagonals match
    bool bimagic = false;             // magic and all those lines share S2
    bool block_magic = false;         // aligned blocks match S1 (and S2 when bimagic)
    bool pandiagonal = false;         // magic and all 2N broken diagonals match S1
    bool balanced = false;            // rows, cols and both diagonals balanced
    bool pair_orthogonal = false;     // rows, cols and both diagonals pair-orthogonal
    bool combination_complete = false;
    bool upside_down_closed = false;  // rotation reaches at least the same level
    bool universal = false;           // magic; rotation magic; mirror semi-magic

    std::vector<LineFailure> failures;        // lines deviating from consensus
    std::optional<SumReport> rotated_sums;    // sums of rotate180(sq), when rotatable
    std::string rotation_note;                // why rotation is unavailable, if so
    std::string mirror_note;                  // why mirroring is unavailable, if so
};

/// Measure every property of the square. Pure; never throws on valid squares.
PropertyReport classify(const Square& sq);

}  // namespace updown
