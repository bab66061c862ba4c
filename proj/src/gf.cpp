#include "updown/gf.hpp"

namespace updown {

namespace {

// Multiplication in GF(4) on bit-pattern indices, modulo x^2 + x + 1.
int gf4_mul(int a, int b) {
    int prod = 0;
    // Schoolbook product of polynomials over GF(2), degree <= 2.
    for (int bit = 0; bit < 2; ++bit) {
        if (b & (1 << bit)) prod ^= a << bit;
    }
    if (prod & 4) prod ^= 7;  // reduce x^2 -> x + 1
    return prod;
}

}  // namespace

SmallField::SmallField(int order) : order_(order) {
    if (order != 3 && order != 4 && order != 5) {
        throw Unsupported("field order must be 3, 4 or 5, got " + std::to_string(order));
    }
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (order == 4) {
                add_[a][b] = a ^ b;
                sub_[a][b] = a ^ b;
                mul_[a][b] = gf4_mul(a, b);
            } else {
                add_[a][b] = (a + b) % order;
                sub_[a][b] = (a - b + order) % order;
                mul_[a][b] = (a * b) % order;
            }
        }
    }
}

}  // namespace updown
