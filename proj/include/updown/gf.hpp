#pragma once

#include <array>
#include <cstdint>

#include "updown/errors.hpp"

namespace updown {

/// Arithmetic tables for the finite fields of order 3, 4 and 5.
///
/// Elements are represented by their index 0..order-1. For prime order the
/// index is the residue itself; for order 4 the index is the bit pattern of
/// the polynomial over GF(2) (0, 1, x, x+1) with multiplication modulo
/// x^2 + x + 1. Addition of indices is therefore XOR when order == 4 and
/// addition mod order otherwise.
class SmallField {
public:
    explicit SmallField(int order);

    int order() const { return order_; }

    int add(int a, int b) const { return add_[a][b]; }
    int sub(int a, int b) const { return sub_[a][b]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int neg(int a) const { return sub_[0][a]; }

    /// 2x2 determinant a*d - b*c.
    int det2(int a, int b, int c, int d) const { return sub(mul(a, d), mul(b, c)); }

private:
    int order_;
    std::array<std::array<int, 5>, 5> add_{};
    std::array<std::array<int, 5>, 5> sub_{};
    std::array<std::array<int, 5>, 5> mul_{};
};

}  // namespace updown
