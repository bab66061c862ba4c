#include "updown/square_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace updown {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream is(line);
    std::string field;
    while (is >> field) fields.push_back(field);
    return fields;
}

long parse_positive(const std::string& text, const char* what, int line) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        throw SquareParseError(std::string(what) + " is not a number: \"" + text + "\"", line);
    }
    if (used != text.size() || v < 1) {
        throw SquareParseError(std::string(what) + " must be a positive integer, got \"" + text +
                                   "\"",
                               line);
    }
    return v;
}

}  // namespace

Square read_square(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw SquareParseError("empty input, expected header line", 1);
    }
    long order = 0, width = 0;
    std::string alphabet_text;
    for (const auto& field : split_fields(line)) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) {
            throw SquareParseError("header field \"" + field + "\" is not key=value", 1);
        }
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "order") {
            order = parse_positive(value, "order", 1);
        } else if (key == "width") {
            width = parse_positive(value, "width", 1);
        } else if (key == "alphabet") {
            alphabet_text = value;
        } else {
            throw SquareParseError("unknown header key \"" + key + "\"", 1);
        }
    }
    if (order == 0 || width == 0 || alphabet_text.empty()) {
        throw SquareParseError("header must carry order=, width= and alphabet=", 1);
    }
    if (order > 1000) {
        throw SquareParseError("order " + std::to_string(order) + " is unreasonably large", 1);
    }
    if (!std::is_sorted(alphabet_text.begin(), alphabet_text.end())) {
        throw SquareParseError("alphabet digits must be ascending, got \"" + alphabet_text + "\"",
                               1);
    }
    DigitAlphabet alphabet;
    try {
        alphabet = DigitAlphabet::parse(alphabet_text);
    } catch (const Error& e) {
        throw SquareParseError(e.what(), 1);
    }

    std::vector<DigitString> cells;
    cells.reserve(static_cast<std::size_t>(order) * order);
    for (long r = 0; r < order; ++r) {
        const int line_no = static_cast<int>(r) + 2;
        if (!std::getline(in, line)) {
            throw SquareParseError("expected " + std::to_string(order) + " rows, input ends after " +
                                       std::to_string(r),
                                   line_no);
        }
        const auto fields = split_fields(line);
        if (fields.size() != static_cast<std::size_t>(order)) {
            throw SquareParseError("expected " + std::to_string(order) + " cells, got " +
                                       std::to_string(fields.size()),
                                   line_no);
        }
        for (const auto& cell : fields) {
            if (cell.size() != static_cast<std::size_t>(width)) {
                throw SquareParseError("cell \"" + cell + "\" does not have width " +
                                           std::to_string(width),
                                       line_no);
            }
            for (char d : cell) {
                if (!alphabet.contains(d)) {
                    throw SquareParseError("cell \"" + cell + "\" uses digit '" +
                                               std::string(1, d) + "' outside alphabet " +
                                               alphabet.digits(),
                                           line_no);
                }
            }
            cells.push_back(cell);
        }
    }
    // Anything after the grid other than blank lines is a mistake.
    int line_no = static_cast<int>(order) + 2;
    while (std::getline(in, line)) {
        if (!split_fields(line).empty()) {
            throw SquareParseError("unexpected content after the grid: \"" + line + "\"", line_no);
        }
        ++line_no;
    }
    return Square::make(std::move(alphabet), static_cast<int>(order), static_cast<int>(width),
                        std::move(cells));
}

Square load_square(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open \"" + path + "\" for reading");
    return read_square(in);
}

void write_square(std::ostream& out, const Square& sq) {
    out << "order=" << sq.order << " width=" << sq.width << " alphabet=" << sq.alphabet.digits()
        << "\n";
    for (int r = 0; r < sq.order; ++r) {
        for (int c = 0; c < sq.order; ++c) {
            if (c) out << ' ';
            out << sq.at(r, c);
        }
        out << "\n";
    }
}

std::string square_text(const Square& sq) {
    std::ostringstream os;
    write_square(os, sq);
    return os.str();
}

void save_square(const std::string& path, const Square& sq) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open \"" + path + "\" for writing");
    write_square(out, sq);
}

}  // namespace updown
