#pragma once

#include <iosfwd>
#include <string>

#include "updown/square.hpp"

namespace updown {

/// Text format for squares:
///   order=9 width=4 alphabet=012
///   0000 0111 0222 ...        (order rows of order cells)
/// Reading rejects malformed headers, wrong cell counts, wrong widths and
/// digits outside the alphabet, reporting 1-based line numbers.
Square read_square(std::istream& in);
Square load_square(const std::string& path);

void write_square(std::ostream& out, const Square& sq);
std::string square_text(const Square& sq);
void save_square(const std::string& path, const Square& sq);

}  // namespace updown
