#pragma once

#include <array>
#include <string>
#include <vector>

#include "updown/digits.hpp"
#include "updown/gf.hpp"
#include "updown/square.hpp"
#include "updown/verify.hpp"

namespace updown {

/// All width-length strings over the alphabet, ordered by digit index
/// (lexicographic in the alphabet's ascending order).
std::vector<DigitString> enumerate_numbers(const DigitAlphabet& alphabet, int width);

/// How the diagonals of a Latin pair are arranged.
enum class DiagPolicy {
    transversal,        // every diagonal of both squares hits every symbol once
    constant_at_mean,   // one diagonal per square is constant at the middle symbol
};

/// A superposition of two orthogonal order-n Latin squares on symbol
/// indices 0..n-1. The pair is the skeleton of a two-digit square: the first
/// square supplies tens digits, the second units.
struct LatinPair {
    int order = 0;
    std::vector<int> l1, l2;  // row-major symbol indices
    DiagPolicy policy = DiagPolicy::transversal;

    int at1(int r, int c) const { return l1[static_cast<std::size_t>(r) * order + c]; }
    int at2(int r, int c) const { return l2[static_cast<std::size_t>(r) * order + c]; }
};

/// Orthogonal Latin pair for order 3, 4 or 5; throws Unsupported otherwise.
/// Order 3 admits no pair with all-transversal diagonals, so it uses the
/// constant_at_mean policy (the square is then magic exactly when the middle
/// alphabet digit equals the mean of all digits). Orders 4 and 5 have both
/// diagonals of both squares transversal, so any alphabet yields a magic
/// square. Order 4 is found by lexicographic search over linear maps
/// a*i + b*j + c on GF(4); orders 3 and 5 are fixed classical pairs.
LatinPair build_latin_pair(int order);

/// The order-n square of two-digit strings over an n-digit alphabet obtained
/// by superposing build_latin_pair(n). Combination complete, all rows and
/// columns sum to 11 * (sum of alphabet digits).
Square build_two_algorism(const DigitAlphabet& alphabet);

/// Which line families, beyond rows and columns, a constructed square must
/// honour with full strength (balance and pair-orthogonality; S1-balance
/// only for the broken diagonals of `pandiag`).
struct GoalSet {
    bool diag = false;
    bool antidiag = false;
    bool blocks = false;
    bool pandiag = false;

    static GoalSet magic() { return {true, true, false, false}; }
    static GoalSet full() { return {true, true, true, false}; }

    bool operator==(const GoalSet&) const = default;
};

/// An invertible affine map on index vectors (i1, i2, j1, j2) over the field
/// of order `base`. Cell (i, j) of the assembled square takes digit p from
/// row p of the map: digit index = sum_t matrix[p][t] * x[t] + offset[p].
struct Scheme {
    int base = 0;
    std::array<std::array<int, 4>, 4> matrix{};
    std::array<int, 4> offset{};

    std::string to_string() const;
    bool operator==(const Scheme&) const = default;
};

/// The square a scheme describes, over an alphabet of exactly `base` digits:
/// order base^2, width 4, combination complete by invertibility.
Square assemble_square(const Scheme& scheme, const DigitAlphabet& alphabet);

/// True when the square carries balance and pair-orthogonality on rows,
/// columns and every family the goals request (S1-balance on broken
/// diagonals for pandiag). These structural facts are what force the bimagic
/// sums, so they are the acceptance test the scheme search applies.
bool meets_goals(const Square& sq, const GoalSet& goals);

/// Lexicographically first scheme over GF(base) whose assembled square
/// passes meets_goals. Rows are enumerated in lexicographic order, pruned by
/// necessary per-row and per-row-pair projection conditions, and candidates
/// with an invertible matrix are settled by assembling and verifying a
/// square over the canonical alphabet 0..base-1 (goal satisfaction does not
/// depend on which digits the alphabet carries). Offsets stay zero: balance
/// and pair-orthogonality are invariant under translation, so an offset can
/// never rescue a rejected matrix. `threads` > 1 splits the search by first
/// row without changing the result. Throws SearchExhausted when no scheme
/// exists (e.g. base 3 with pandiag, which is provably impossible).
Scheme search_scheme(int base, const GoalSet& goals, int threads = 1);

/// A built four-digit square along with the scheme that produced it.
struct FourAlgorismBuild {
    Scheme scheme;
    Square square;
};

/// Search a scheme for the alphabet's size and assemble it over the
/// alphabet. The alphabet must have 3, 4 or 5 digits.
FourAlgorismBuild build_four_algorism_ex(const DigitAlphabet& alphabet, const GoalSet& goals,
                                         int threads = 1);
Square build_four_algorism(const DigitAlphabet& alphabet, const GoalSet& goals, int threads = 1);

}  // namespace updown
