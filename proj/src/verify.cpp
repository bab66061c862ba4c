#include "updown/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace updown {

namespace {

int exact_isqrt(int n) {
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    return r * r == n ? r : -1;
}

}  // namespace

std::vector<std::vector<int>> family_lines(int order, LineFamily family) {
    const int n = order;
    auto idx = [n](int r, int c) { return r * n + c; };
    std::vector<std::vector<int>> lines;
    switch (family) {
        case LineFamily::rows:
            for (int r = 0; r < n; ++r) {
                std::vector<int> line(n);
                for (int c = 0; c < n; ++c) line[c] = idx(r, c);
                lines.push_back(std::move(line));
            }
            break;
        case LineFamily::cols:
            for (int c = 0; c < n; ++c) {
                std::vector<int> line(n);
                for (int r = 0; r < n; ++r) line[r] = idx(r, c);
                lines.push_back(std::move(line));
            }
            break;
        case LineFamily::main_diag: {
            std::vector<int> line(n);
            for (int i = 0; i < n; ++i) line[i] = idx(i, i);
            lines.push_back(std::move(line));
            break;
        }
        case LineFamily::anti_diag: {
            std::vector<int> line(n);
            for (int i = 0; i < n; ++i) line[i] = idx(i, n - 1 - i);
            lines.push_back(std::move(line));
            break;
        }
        case LineFamily::broken_diags:
            for (int o = 0; o < n; ++o) {  // down-right: col grows with row
                std::vector<int> line(n);
                for (int i = 0; i < n; ++i) line[i] = idx(i, (i + o) % n);
                lines.push_back(std::move(line));
            }
            for (int o = 0; o < n; ++o) {  // down-left: col shrinks with row
                std::vector<int> line(n);
                for (int i = 0; i < n; ++i) line[i] = idx(i, ((o - i) % n + n) % n);
                lines.push_back(std::move(line));
            }
            break;
        case LineFamily::blocks: {
            const int b = exact_isqrt(n);
            if (b < 0) {
                throw BadFamily("order " + std::to_string(n) +
                                " is not a perfect square; no block family");
            }
            for (int br = 0; br < b; ++br) {
                for (int bc = 0; bc < b; ++bc) {
                    std::vector<int> line;
                    line.reserve(n);
                    for (int r = br * b; r < (br + 1) * b; ++r) {
                        for (int c = bc * b; c < (bc + 1) * b; ++c) line.push_back(idx(r, c));
                    }
                    lines.push_back(std::move(line));
                }
            }
            break;
        }
        case LineFamily::grid: {
            std::vector<int> line(n * n);
            for (int i = 0; i < n * n; ++i) line[i] = i;
            lines.push_back(std::move(line));
            break;
        }
    }
    return lines;
}

std::vector<SumPair> line_profile(const Square& sq, LineFamily family) {
    std::vector<std::int64_t> values(sq.cells.size());
    for (std::size_t i = 0; i < sq.cells.size(); ++i) values[i] = value_of(sq.cells[i]);
    std::vector<SumPair> profile;
    for (const auto& line : family_lines(sq.order, family)) {
        SumPair p;
        for (int cell : line) {
            const std::int64_t v = values[static_cast<std::size_t>(cell)];
            p.s1 += v;
            p.s2 += v * v;
        }
        profile.push_back(p);
    }
    return profile;
}

SumPair expected_sums(const DigitAlphabet& alphabet, int width, int order) {
    if (width < 1 || width > 9) {
        throw Unsupported("expected_sums supports widths 1..9, got " + std::to_string(width));
    }
    long long combos = 1;
    for (int i = 0; i < width; ++i) {
        combos *= alphabet.size();
        if (combos > 1000000) throw Unsupported("expected_sums enumeration too large");
    }
    if (order < 1 || combos % order != 0) {
        throw Unsupported("order " + std::to_string(order) + " does not divide the " +
                          std::to_string(combos) + " combinations of " + alphabet.digits() +
                          " at width " + std::to_string(width));
    }
    // Walk the odometer over digit indices; totals fit int64 for the sizes
    // admitted above (at most 10^6 values, each below 10^9).
    std::int64_t total1 = 0;
    std::int64_t total2 = 0;
    std::vector<int> odo(static_cast<std::size_t>(width), 0);
    for (long long count = 0; count < combos; ++count) {
        std::int64_t v = 0;
        for (int pos = 0; pos < width; ++pos) {
            v = v * 10 + (alphabet.digit(odo[static_cast<std::size_t>(pos)]) - '0');
        }
        total1 += v;
        total2 += v * v;
        for (int pos = width - 1; pos >= 0; --pos) {
            if (++odo[static_cast<std::size_t>(pos)] < alphabet.size()) break;
            odo[static_cast<std::size_t>(pos)] = 0;
        }
    }
    if (total1 % order != 0 || total2 % order != 0) {
        throw NotDivisible("totals " + std::to_string(total1) + "/" + std::to_string(total2) +
                           " do not divide evenly across " + std::to_string(order) + " lines");
    }
    return {total1 / order, total2 / order};
}

bool check_balance(const Square& sq, LineFamily family) {
    const int n = sq.alphabet.size();
    for (const auto& line : family_lines(sq.order, family)) {
        if (line.size() % static_cast<std::size_t>(n) != 0) return false;
        const int quota = static_cast<int>(line.size()) / n;
        // counts[digit position][digit index]
        std::vector<std::vector<int>> counts(
            static_cast<std::size_t>(sq.width),
            std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int cell : line) {
            const DigitString& ds = sq.cells[static_cast<std::size_t>(cell)];
            for (int pos = 0; pos < sq.width; ++pos) {
                const int di = sq.alphabet.index_of(ds[static_cast<std::size_t>(pos)]);
                ++counts[static_cast<std::size_t>(pos)][static_cast<std::size_t>(di)];
            }
        }
        for (const auto& per_pos : counts) {
            for (int c : per_pos) {
                if (c != quota) return false;
            }
        }
    }
    return true;
}

bool check_pair_orthogonality(const Square& sq, LineFamily family) {
    const int n = sq.alphabet.size();
    if (sq.width != 4 || sq.order != n * n) {
        throw Unsupported(
            "pair orthogonality is defined for four-digit squares of order alphabet_size^2");
    }
    if (family == LineFamily::grid) {
        throw Unsupported("pair orthogonality is defined on families of order-length lines");
    }
    for (const auto& line : family_lines(sq.order, family)) {
        for (int p = 0; p < sq.width; ++p) {
            for (int q = 0; q < sq.width; ++q) {
                if (p == q) continue;
                std::vector<int> seen(static_cast<std::size_t>(n) * n, 0);
                for (int cell : line) {
                    const DigitString& ds = sq.cells[static_cast<std::size_t>(cell)];
                    const int vp = sq.alphabet.index_of(ds[static_cast<std::size_t>(p)]);
                    const int vq = sq.alphabet.index_of(ds[static_cast<std::size_t>(q)]);
                    ++seen[static_cast<std::size_t>(vp) * n + vq];
                }
                for (int count : seen) {
                    if (count != 1) return false;
                }
            }
        }
    }
    return true;
}

namespace {

// The magic hierarchy of one square, without looking at any transform.
struct BaseLevel {
    bool semi = false, magic = false, bimagic = false;
    std::optional<std::int64_t> s1, s2;
    std::vector<SumPair> rows, cols;
    SumPair diag, anti;
};

BaseLevel base_level(const Square& sq) {
    BaseLevel b;
    b.rows = line_profile(sq, LineFamily::rows);
    b.cols = line_profile(sq, LineFamily::cols);
    b.diag = line_profile(sq, LineFamily::main_diag)[0];
    b.anti = line_profile(sq, LineFamily::anti_diag)[0];

    auto all_s1 = [](const std::vector<SumPair>& v, std::int64_t want) {
        return std::all_of(v.begin(), v.end(), [&](const SumPair& p) { return p.s1 == want; });
    };
    auto all_s2 = [](const std::vector<SumPair>& v, std::int64_t want) {
        return std::all_of(v.begin(), v.end(), [&](const SumPair& p) { return p.s2 == want; });
    };

    const std::int64_t s1 = b.rows[0].s1;
    b.semi = all_s1(b.rows, s1) && all_s1(b.cols, s1);
    if (b.semi) b.s1 = s1;
    b.magic = b.semi && b.diag.s1 == s1 && b.anti.s1 == s1;
    const std::int64_t s2 = b.rows[0].s2;
    b.bimagic =
        b.magic && all_s2(b.rows, s2) && all_s2(b.cols, s2) && b.diag.s2 == s2 && b.anti.s2 == s2;
    if (b.bimagic) b.s2 = s2;
    return b;
}

int level_rank(const BaseLevel& b) {
    if (b.bimagic) return 3;
    if (b.magic) return 2;
    if (b.semi) return 1;
    return 0;
}

// Most frequent value; ties break toward the smaller value.
std::int64_t consensus_s1(const std::vector<SumPair>& rows, const std::vector<SumPair>& cols) {
    std::map<std::int64_t, int> freq;
    for (const auto& p : rows) ++freq[p.s1];
    for (const auto& p : cols) ++freq[p.s1];
    std::int64_t best = rows.front().s1;
    int best_count = 0;
    for (const auto& [v, count] : freq) {
        if (count > best_count) {
            best = v;
            best_count = count;
        }
    }
    return best;
}

std::string first_blocker(const Square& sq, bool (*ok)(char)) {
    for (int r = 0; r < sq.order; ++r) {
        for (int c = 0; c < sq.order; ++c) {
            for (char d : sq.at(r, c)) {
                if (!ok(d)) {
                    return std::string("cell (") + std::to_string(r) + "," + std::to_string(c) +
                           ") contains digit '" + d + "'";
                }
            }
        }
    }
    for (char d : sq.alphabet.digits()) {
        if (!ok(d)) return std::string("alphabet contains digit '") + d + "'";
    }
    return "";
}

}  // namespace

PropertyReport classify(const Square& sq) {
    PropertyReport rep;
    const BaseLevel base = base_level(sq);

    rep.semi_magic = base.semi;
    rep.magic = base.magic;
    rep.bimagic = base.bimagic;
    rep.s1 = base.s1;
    rep.s2 = base.s2;
    rep.combination_complete = combination_complete(sq);

    rep.balanced = check_balance(sq, LineFamily::rows) && check_balance(sq, LineFamily::cols) &&
                   check_balance(sq, LineFamily::main_diag) &&
                   check_balance(sq, LineFamily::anti_diag);
    const int n = sq.alphabet.size();
    if (sq.width == 4 && sq.order == n * n) {
        rep.pair_orthogonal = check_pair_orthogonality(sq, LineFamily::rows) &&
                              check_pair_orthogonality(sq, LineFamily::cols) &&
                              check_pair_orthogonality(sq, LineFamily::main_diag) &&
                              check_pair_orthogonality(sq, LineFamily::anti_diag);
    }

    // Failures list every line of the magic hierarchy whose S1 deviates from
    // the consensus (the established magic sum, or the modal row/col sum).
    const std::int64_t s1_ref = base.s1 ? *base.s1 : consensus_s1(base.rows, base.cols);
    auto note_failures = [&](const std::vector<SumPair>& profile, const std::string& name) {
        for (std::size_t i = 0; i < profile.size(); ++i) {
            if (profile[i].s1 != s1_ref) {
                rep.failures.push_back({name, static_cast<int>(i), profile[i].s1, profile[i].s2});
            }
        }
    };
    note_failures(base.rows, "row");
    note_failures(base.cols, "col");
    note_failures({base.diag}, "diag");
    note_failures({base.anti}, "antidiag");

    if (exact_isqrt(sq.order) > 0) {
        const auto blocks = line_profile(sq, LineFamily::blocks);
        bool blocks_s1 = base.semi && std::all_of(blocks.begin(), blocks.end(), [&](const SumPair& p) {
                             return p.s1 == *base.s1;
                         });
        bool blocks_s2 = !base.bimagic ||
                         std::all_of(blocks.begin(), blocks.end(),
                                     [&](const SumPair& p) { return p.s2 == *base.s2; });
        rep.block_magic = blocks_s1 && blocks_s2;
        if (base.semi) note_failures(blocks, "block");
    }

    if (base.magic) {
        const auto broken = line_profile(sq, LineFamily::broken_diags);
        rep.pandiagonal = std::all_of(broken.begin(), broken.end(),
                                      [&](const SumPair& p) { return p.s1 == *base.s1; });
    }

    bool rot_magic = false;
    if (rotatable(sq)) {
        const BaseLevel rot = base_level(rotate180(sq));
        rep.upside_down_closed = level_rank(rot) >= level_rank(base);
        rot_magic = rot.magic;
        SumReport sums;
        sums.s1 = rot.s1;
        sums.s2 = rot.s2;
        rep.rotated_sums = sums;
    } else {
        rep.rotation_note = first_blocker(sq, strobo_rotatable) + ", which has no 180-degree rotation";
    }

    bool mirror_semi = false;
    if (mirrorable(sq)) {
        mirror_semi = base_level(mirror_square(sq)).semi;
    } else {
        auto mirror_ok = [](char d) { return mirrorable(d); };
        rep.mirror_note = first_blocker(sq, mirror_ok) + ", which has no mirror image";
    }
    rep.universal = base.magic && rot_magic && mirror_semi;

    return rep;
}

}  // namespace updown
