#include <vector>

#include "doctest.h"
#include "updown/verify.hpp"

using namespace updown;

namespace {

Square make_square(const std::string& alphabet, int order, int width,
                   std::vector<DigitString> cells) {
    return Square::make(DigitAlphabet::parse(alphabet), order, width, std::move(cells));
}

// Magic over {0,1,2}: every row, column and both diagonals sum to 33.
Square magic012() {
    return make_square("012", 3, 2, {"10", "22", "01", "02", "11", "20", "21", "00", "12"});
}

// Semi-magic over {1,6,9}: rows and columns 176, diagonals 196 and 178.
Square semi169() {
    return make_square("169", 3, 2, {"61", "99", "16", "19", "66", "91", "96", "11", "69"});
}

// Magic over {0,1,2,9} with every 2x2 block matching: superposed orthogonal
// Latin squares with transversal diagonals.
Square magic0129() {
    return make_square("0129", 4, 2,
                       {"00", "29", "91", "12", "11", "92", "20", "09", "22", "01", "19", "90",
                        "99", "10", "02", "21"});
}

} // namespace

TEST_CASE("family_lines enumerates rows and columns row-major") {
    auto rows = family_lines(3, LineFamily::rows);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<int>{0, 1, 2});
    CHECK(rows[2] == std::vector<int>{6, 7, 8});

    auto cols = family_lines(3, LineFamily::cols);
    REQUIRE(cols.size() == 3);
    CHECK(cols[0] == std::vector<int>{0, 3, 6});
    CHECK(cols[2] == std::vector<int>{2, 5, 8});
}

TEST_CASE("family_lines covers both principal diagonals") {
    CHECK(family_lines(3, LineFamily::main_diag)[0] == std::vector<int>{0, 4, 8});
    CHECK(family_lines(3, LineFamily::anti_diag)[0] == std::vector<int>{2, 4, 6});
}

TEST_CASE("family_lines lists 2N broken diagonals, both directions") {
    auto broken = family_lines(3, LineFamily::broken_diags);
    REQUIRE(broken.size() == 6);
    CHECK(broken[0] == std::vector<int>{0, 4, 8}); // offset 0 down-right = main diagonal
    CHECK(broken[1] == std::vector<int>{1, 5, 6});
    CHECK(broken[5] == std::vector<int>{2, 4, 6}); // offset 2 down-left = anti-diagonal
}

TEST_CASE("family_lines blocks require a square order") {
    auto blocks = family_lines(4, LineFamily::blocks);
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[0] == std::vector<int>{0, 1, 4, 5});
    CHECK(blocks[1] == std::vector<int>{2, 3, 6, 7});
    CHECK(blocks[3] == std::vector<int>{10, 11, 14, 15});

    CHECK_THROWS_AS(family_lines(3, LineFamily::blocks), BadFamily);
}

TEST_CASE("family_lines grid is one line of all cells") {
    auto grid = family_lines(2, LineFamily::grid);
    REQUIRE(grid.size() == 1);
    CHECK(grid[0] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("line_profile sums values and squared values") {
    auto rows = line_profile(magic012(), LineFamily::rows);
    REQUIRE(rows.size() == 3);
    for (const auto& p : rows) CHECK(p.s1 == 33);
    CHECK(rows[0].s2 == 100 + 484 + 1);
    CHECK(line_profile(magic012(), LineFamily::main_diag)[0].s1 == 33);

    CHECK(line_profile(semi169(), LineFamily::main_diag)[0].s1 == 196);
    CHECK(line_profile(semi169(), LineFamily::anti_diag)[0].s1 == 178);
    for (const auto& p : line_profile(semi169(), LineFamily::rows)) CHECK(p.s1 == 176);
}

TEST_CASE("expected_sums reproduces the known totals") {
    auto check = [](const char* alpha, int width, int order, std::int64_t s1, std::int64_t s2) {
        SumPair p = expected_sums(DigitAlphabet::parse(alpha), width, order);
        CHECK(p.s1 == s1);
        CHECK(p.s2 == s2);
    };
    check("012", 2, 3, 33, 565);
    check("0129", 2, 4, 132, 9406);
    check("01269", 2, 5, 198, 13618);
    check("012", 4, 9, 9999, 17169495);
    check("169", 4, 9, 53328, 414976074);
    check("0129", 4, 16, 53328, 379762424);
    check("0126", 4, 16, 39996, 183818384);
    check("01269", 4, 25, 99990, 688808890);
}

TEST_CASE("expected_sums demands exact division") {
    // Totals 528/40874: the first splits into 176 per line, the second leaves
    // a remainder, so the alphabet cannot support three equal-S2 lines.
    CHECK_THROWS_AS(expected_sums(DigitAlphabet::parse("169"), 2, 3), NotDivisible);
    CHECK_THROWS_AS(expected_sums(DigitAlphabet::parse("012"), 1, 3), NotDivisible);
    CHECK_THROWS_AS(expected_sums(DigitAlphabet::parse("0125689"), 2, 7), NotDivisible);
}

TEST_CASE("expected_sums rejects impossible shapes") {
    CHECK_THROWS_AS(expected_sums(DigitAlphabet::parse("01"), 2, 3), Unsupported); // 4 % 3 != 0
    CHECK_THROWS_AS(expected_sums(DigitAlphabet::parse("012"), 0, 3), Unsupported);
    CHECK_THROWS_AS(expected_sums(DigitAlphabet::parse("0123456789"), 7, 10),
                    Unsupported); // 10^7 combinations
}

TEST_CASE("check_balance inspects every digit position") {
    Square sq = magic012();
    CHECK(check_balance(sq, LineFamily::rows));
    CHECK(check_balance(sq, LineFamily::cols));
    // Anti-diagonal holds 01, 11, 21: first position balanced, second constant.
    CHECK_FALSE(check_balance(sq, LineFamily::anti_diag));
    // Main diagonal holds 10, 11, 12: constant first position.
    CHECK_FALSE(check_balance(sq, LineFamily::main_diag));
    // The whole grid of a combination-complete square is always balanced.
    CHECK(check_balance(sq, LineFamily::grid));
    CHECK(check_balance(semi169(), LineFamily::grid));
    CHECK_FALSE(check_balance(semi169(), LineFamily::main_diag)); // 61 66 69
}

TEST_CASE("check_pair_orthogonality exists only for four-digit squares of order n^2") {
    CHECK_THROWS_AS(check_pair_orthogonality(magic012(), LineFamily::rows), Unsupported);

    Square wrong_order = make_square("01", 2, 4, {"0000", "0111", "1011", "1100"});
    CHECK_THROWS_AS(check_pair_orthogonality(wrong_order, LineFamily::rows), Unsupported);

    Square shaped = make_square(
        "01", 4, 4,
        {"0000", "0101", "1010", "1111", "0011", "0110", "1001", "1100", "0000", "0101", "1010",
         "1111", "0011", "0110", "1001", "1100"});
    CHECK_THROWS_AS(check_pair_orthogonality(shaped, LineFamily::grid), Unsupported);
    // Positions 0 and 2 repeat the pair (0,0) within the first row.
    CHECK_FALSE(check_pair_orthogonality(shaped, LineFamily::rows));
}

TEST_CASE("classify grades the magic hierarchy") {
    PropertyReport rep = classify(magic012());
    CHECK(rep.semi_magic);
    CHECK(rep.magic);
    CHECK_FALSE(rep.bimagic);
    REQUIRE(rep.s1.has_value());
    CHECK(*rep.s1 == 33);
    CHECK_FALSE(rep.s2.has_value());
    CHECK(rep.combination_complete);
    CHECK(rep.failures.empty());
    // Diagonals are transversal in one position but constant in the other.
    CHECK_FALSE(rep.balanced);
    // Rotation gives another magic square with the same sum.
    CHECK(rep.upside_down_closed);
    REQUIRE(rep.rotated_sums.has_value());
    CHECK(rep.rotated_sums->s1 == 33);
    CHECK_FALSE(rep.rotated_sums->s2.has_value());
    // The mirror is still semi-magic, so the square counts as universal.
    CHECK(rep.universal);
    CHECK(rep.rotation_note.empty());
    CHECK(rep.mirror_note.empty());
}

TEST_CASE("classify reports semi-magic with deviating diagonals") {
    PropertyReport rep = classify(semi169());
    CHECK(rep.semi_magic);
    CHECK_FALSE(rep.magic);
    REQUIRE(rep.s1.has_value());
    CHECK(*rep.s1 == 176);
    REQUIRE(rep.failures.size() == 2);
    CHECK(rep.failures[0] == LineFailure{"diag", 0, 196, 12838});
    CHECK(rep.failures[1].family == "antidiag");
    CHECK(rep.failures[1].s1 == 178);
    // The rotation is again semi-magic with the same row sum: closed at its level.
    CHECK(rep.upside_down_closed);
    REQUIRE(rep.rotated_sums.has_value());
    CHECK(rep.rotated_sums->s1 == 176);
    // 6 and 9 have no mirror image.
    CHECK_FALSE(rep.universal);
    CHECK(rep.mirror_note.find("no mirror image") != std::string::npos);
    CHECK(rep.combination_complete);
}

TEST_CASE("classify pins deviating lines after a cell swap") {
    Square sq = magic012();
    std::swap(sq.at(0, 1), sq.at(2, 1)); // off both diagonals, same column
    PropertyReport rep = classify(sq);
    CHECK_FALSE(rep.semi_magic);
    CHECK_FALSE(rep.s1.has_value());
    REQUIRE(rep.failures.size() == 2);
    CHECK(rep.failures[0].family == "row");
    CHECK(rep.failures[0].index == 0);
    CHECK(rep.failures[0].s1 == 11);
    CHECK(rep.failures[1].family == "row");
    CHECK(rep.failures[1].index == 2);
    CHECK(rep.failures[1].s1 == 55);
}

TEST_CASE("classify marks blocks and balance on the 4x4 square") {
    PropertyReport rep = classify(magic0129());
    CHECK(rep.magic);
    CHECK_FALSE(rep.bimagic);
    REQUIRE(rep.s1.has_value());
    CHECK(*rep.s1 == 132);
    CHECK(rep.block_magic); // all four 2x2 blocks also sum to 132
    CHECK(rep.balanced);    // transversal diagonals in both positions
    CHECK(rep.combination_complete);
    CHECK(rep.failures.empty());
    CHECK_FALSE(rep.pandiagonal); // broken diagonals are not constant
    // Rotation leaves the {0,1,2,9} alphabet as {0,1,2,6}: magic of sum 99.
    CHECK(rep.upside_down_closed);
    REQUIRE(rep.rotated_sums.has_value());
    CHECK(rep.rotated_sums->s1 == 99);
    CHECK_FALSE(rep.universal); // 9 has no mirror image
}

TEST_CASE("classify explains unrotatable squares") {
    Square sq = make_square("38", 2, 1, {"3", "8", "8", "3"});
    PropertyReport rep = classify(sq);
    CHECK_FALSE(rep.upside_down_closed);
    CHECK_FALSE(rep.rotated_sums.has_value());
    CHECK(rep.rotation_note.find("'3'") != std::string::npos);
    CHECK(rep.rotation_note.find("(0,0)") != std::string::npos);
}
