#include "updown/construct.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace updown {

std::vector<DigitString> enumerate_numbers(const DigitAlphabet& alphabet, int width) {
    if (width < 1 || width > 9) {
        throw Unsupported("enumerate_numbers supports widths 1..9, got " + std::to_string(width));
    }
    long long combos = 1;
    for (int i = 0; i < width; ++i) {
        combos *= alphabet.size();
        if (combos > 1000000) throw Unsupported("enumerate_numbers enumeration too large");
    }
    std::vector<DigitString> out;
    out.reserve(static_cast<std::size_t>(combos));
    std::vector<int> odo(static_cast<std::size_t>(width), 0);
    for (long long count = 0; count < combos; ++count) {
        DigitString ds(static_cast<std::size_t>(width), '0');
        for (int pos = 0; pos < width; ++pos) {
            ds[static_cast<std::size_t>(pos)] = alphabet.digit(odo[static_cast<std::size_t>(pos)]);
        }
        out.push_back(std::move(ds));
        for (int pos = width - 1; pos >= 0; --pos) {
            if (++odo[static_cast<std::size_t>(pos)] < alphabet.size()) break;
            odo[static_cast<std::size_t>(pos)] = 0;
        }
    }
    return out;
}

namespace {

// Row-major grid of a * i + b * j + c over the field.
std::vector<int> linear_grid(const SmallField& F, int a, int b, int c) {
    const int n = F.order();
    std::vector<int> g(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g[static_cast<std::size_t>(i) * n + j] = F.add(F.add(F.mul(a, i), F.mul(b, j)), c);
        }
    }
    return g;
}

bool is_latin(const std::vector<int>& g, int n) {
    for (int r = 0; r < n; ++r) {
        std::vector<bool> row(static_cast<std::size_t>(n), false);
        std::vector<bool> col(static_cast<std::size_t>(n), false);
        for (int k = 0; k < n; ++k) {
            int rv = g[static_cast<std::size_t>(r) * n + k];
            int cv = g[static_cast<std::size_t>(k) * n + r];
            if (row[static_cast<std::size_t>(rv)] || col[static_cast<std::size_t>(cv)]) return false;
            row[static_cast<std::size_t>(rv)] = true;
            col[static_cast<std::size_t>(cv)] = true;
        }
    }
    return true;
}

bool diagonals_transversal(const std::vector<int>& g, int n) {
    std::vector<bool> main_seen(static_cast<std::size_t>(n), false);
    std::vector<bool> anti_seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        int mv = g[static_cast<std::size_t>(i) * n + i];
        int av = g[static_cast<std::size_t>(i) * n + (n - 1 - i)];
        if (main_seen[static_cast<std::size_t>(mv)] || anti_seen[static_cast<std::size_t>(av)]) {
            return false;
        }
        main_seen[static_cast<std::size_t>(mv)] = true;
        anti_seen[static_cast<std::size_t>(av)] = true;
    }
    return true;
}

bool orthogonal(const std::vector<int>& g1, const std::vector<int>& g2, int n) {
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    for (std::size_t i = 0; i < g1.size(); ++i) {
        const std::size_t key = static_cast<std::size_t>(g1[i]) * n + g2[i];
        if (seen[key]) return false;
        seen[key] = true;
    }
    return true;
}

}  // namespace

LatinPair build_latin_pair(int order) {
    LatinPair pair;
    pair.order = order;
    const std::size_t cells = static_cast<std::size_t>(order) * order;
    pair.l1.resize(cells);
    pair.l2.resize(cells);
    switch (order) {
        case 3:
            // No order-3 pair has transversal diagonals on both squares, so
            // pin one diagonal of each to the middle symbol: the
            // anti-diagonal of the tens square and the main diagonal of the
            // units square (the classical pair i+j, i+2j shifted so the
            // constant symbol is the middle index). Rows, columns and the
            // remaining diagonals stay transversal.
            pair.policy = DiagPolicy::constant_at_mean;
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    pair.l1[static_cast<std::size_t>(i) * 3 + j] = (i + j + 2) % 3;
                    pair.l2[static_cast<std::size_t>(i) * 3 + j] = (i + 2 * j + 1) % 3;
                }
            }
            break;
        case 4: {
            // Lexicographically first pair of linear maps over GF(4) that is
            // Latin, diagonal-transversal and orthogonal.
            pair.policy = DiagPolicy::transversal;
            const SmallField F(4);
            for (int a1 = 0; a1 < 4; ++a1)
                for (int b1 = 0; b1 < 4; ++b1)
                    for (int c1 = 0; c1 < 4; ++c1) {
                        auto g1 = linear_grid(F, a1, b1, c1);
                        if (!is_latin(g1, 4) || !diagonals_transversal(g1, 4)) continue;
                        for (int a2 = 0; a2 < 4; ++a2)
                            for (int b2 = 0; b2 < 4; ++b2)
                                for (int c2 = 0; c2 < 4; ++c2) {
                                    auto g2 = linear_grid(F, a2, b2, c2);
                                    if (!is_latin(g2, 4) || !diagonals_transversal(g2, 4)) continue;
                                    if (!orthogonal(g1, g2, 4)) continue;
                                    pair.l1 = std::move(g1);
                                    pair.l2 = std::move(g2);
                                    return pair;
                                }
                    }
            throw SearchExhausted("no orthogonal diagonal Latin pair of order 4");
        }
        case 5:
            // The classical pair 2i+j, i+2j mod 5: rows, columns and every
            // (broken) diagonal of both squares are transversals.
            pair.policy = DiagPolicy::transversal;
            for (int i = 0; i < 5; ++i) {
                for (int j = 0; j < 5; ++j) {
                    pair.l1[static_cast<std::size_t>(i) * 5 + j] = (2 * i + j) % 5;
                    pair.l2[static_cast<std::size_t>(i) * 5 + j] = (i + 2 * j) % 5;
                }
            }
            break;
        default:
            throw Unsupported("Latin pairs are built for orders 3, 4 and 5, got " +
                              std::to_string(order));
    }
    return pair;
}

Square build_two_algorism(const DigitAlphabet& alphabet) {
    const int n = alphabet.size();
    const LatinPair pair = build_latin_pair(n);
    std::vector<DigitString> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            DigitString ds;
            ds += alphabet.digit(pair.at1(i, j));
            ds += alphabet.digit(pair.at2(i, j));
            cells.push_back(std::move(ds));
        }
    }
    return Square::make(alphabet, n, 2, std::move(cells));
}

std::string Scheme::to_string() const {
    std::ostringstream os;
    os << "GF(" << base << ") A=[";
    for (int r = 0; r < 4; ++r) {
        os << (r ? ",[" : "[");
        for (int c = 0; c < 4; ++c) os << (c ? "," : "") << matrix[r][c];
        os << "]";
    }
    os << "] b=[";
    for (int p = 0; p < 4; ++p) os << (p ? "," : "") << offset[p];
    os << "]";
    return os.str();
}

Square assemble_square(const Scheme& scheme, const DigitAlphabet& alphabet) {
    const int n = scheme.base;
    if (alphabet.size() != n) {
        throw Unsupported("scheme over GF(" + std::to_string(n) + ") needs a " +
                          std::to_string(n) + "-digit alphabet, got " + alphabet.digits());
    }
    const SmallField F(n);
    const int N = n * n;
    std::vector<DigitString> cells;
    cells.reserve(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const int x[4] = {i / n, i % n, j / n, j % n};
            DigitString ds(4, '0');
            for (int p = 0; p < 4; ++p) {
                int d = scheme.offset[p];
                for (int t = 0; t < 4; ++t) d = F.add(d, F.mul(scheme.matrix[p][t], x[t]));
                ds[static_cast<std::size_t>(p)] = alphabet.digit(d);
            }
            cells.push_back(std::move(ds));
        }
    }
    return Square::make(alphabet, N, 4, std::move(cells));
}

bool meets_goals(const Square& sq, const GoalSet& goals) {
    auto strong = [&](LineFamily fam) {
        return check_balance(sq, fam) && check_pair_orthogonality(sq, fam);
    };
    if (!strong(LineFamily::rows) || !strong(LineFamily::cols)) return false;
    if (goals.diag && !strong(LineFamily::main_diag)) return false;
    if (goals.antidiag && !strong(LineFamily::anti_diag)) return false;
    if (goals.blocks && !strong(LineFamily::blocks)) return false;
    if (goals.pandiag && !check_balance(sq, LineFamily::broken_diags)) return false;
    return true;
}

namespace {

using Row = std::array<int, 4>;

// 2-vector projections of one scheme row, one per active pair family.
struct RowView {
    Row row;
    std::vector<std::array<int, 2>> proj;
};

// Necessary conditions on a single row, per goal family: the projection
// driving that family must be nonzero (else the family cannot be balanced in
// this digit position), and for pandiag both broken-diagonal directions must
// sweep (row[0] +- row[2] nonzero).
std::optional<RowView> view_row(const SmallField& F, const Row& row, const GoalSet& goals) {
    RowView v;
    v.row = row;
    auto push_nonzero = [&](int a, int b) {
        if (a == 0 && b == 0) return false;
        v.proj.push_back({a, b});
        return true;
    };
    if (!push_nonzero(row[2], row[3])) return std::nullopt;  // rows family
    if (!push_nonzero(row[0], row[1])) return std::nullopt;  // cols family
    if (goals.blocks && !push_nonzero(row[1], row[3])) return std::nullopt;
    if (goals.diag && !push_nonzero(F.add(row[0], row[2]), F.add(row[1], row[3]))) {
        return std::nullopt;
    }
    // In GF(4) index reversal coincides with translation, so the
    // anti-diagonal condition duplicates the main-diagonal one; the verifier
    // still checks the family on assembled candidates.
    if (goals.antidiag && F.order() != 4 &&
        !push_nonzero(F.sub(row[0], row[2]), F.sub(row[1], row[3]))) {
        return std::nullopt;
    }
    if (goals.pandiag &&
        (F.add(row[0], row[2]) == 0 || F.sub(row[0], row[2]) == 0)) {
        return std::nullopt;
    }
    return v;
}

bool pair_independent(const SmallField& F, const RowView& u, const RowView& v) {
    for (std::size_t f = 0; f < u.proj.size(); ++f) {
        if (F.det2(u.proj[f][0], u.proj[f][1], v.proj[f][0], v.proj[f][1]) == 0) return false;
    }
    return true;
}

bool invertible(const SmallField& F, const std::array<Row, 4>& rows) {
    // Gaussian elimination over the field.
    std::array<Row, 4> m = rows;
    for (int col = 0, rank = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = rank; r < 4; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return false;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        // Field inverse by scan (orders are tiny).
        const int lead = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        int inv = 0;
        for (int e = 1; e < F.order(); ++e) {
            if (F.mul(lead, e) == 1) inv = e;
        }
        for (int r = rank + 1; r < 4; ++r) {
            const int factor =
                F.mul(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)], inv);
            for (int c = col; c < 4; ++c) {
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    F.sub(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                          F.mul(factor,
                                m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]));
            }
        }
        ++rank;
    }
    return true;
}

struct SearchContext {
    const SmallField& F;
    const GoalSet& goals;
    const DigitAlphabet probe;  // canonical alphabet 0..n-1
    const std::vector<RowView>& views;
};

// Lexicographically first acceptable completion whose first row is
// views[first]; rows 2..4 range over the whole view list in order.
std::optional<Scheme> complete_from(const SearchContext& ctx, std::size_t first) {
    const auto& views = ctx.views;
    const std::size_t count = views.size();
    for (std::size_t b = 0; b < count; ++b) {
        if (!pair_independent(ctx.F, views[first], views[b])) continue;
        for (std::size_t c = 0; c < count; ++c) {
            if (!pair_independent(ctx.F, views[first], views[c]) ||
                !pair_independent(ctx.F, views[b], views[c])) {
                continue;
            }
            for (std::size_t d = 0; d < count; ++d) {
                if (!pair_independent(ctx.F, views[first], views[d]) ||
                    !pair_independent(ctx.F, views[b], views[d]) ||
                    !pair_independent(ctx.F, views[c], views[d])) {
                    continue;
                }
                const std::array<Row, 4> rows = {views[first].row, views[b].row, views[c].row,
                                                 views[d].row};
                if (!invertible(ctx.F, rows)) continue;
                Scheme s;
                s.base = ctx.F.order();
                for (int r = 0; r < 4; ++r) {
                    for (int col = 0; col < 4; ++col) {
                        s.matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
                            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                    }
                }
                if (meets_goals(assemble_square(s, ctx.probe), ctx.goals)) return s;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Scheme search_scheme(int base, const GoalSet& goals, int threads) {
    const SmallField F(base);
    std::string probe_digits;
    for (int d = 0; d < base; ++d) probe_digits += static_cast<char>('0' + d);

    std::vector<RowView> views;
    Row row{};
    for (int a = 0; a < base; ++a)
        for (int b = 0; b < base; ++b)
            for (int c = 0; c < base; ++c)
                for (int d = 0; d < base; ++d) {
                    if (a == 0 && b == 0 && c == 0 && d == 0) continue;
                    row = {a, b, c, d};
                    if (auto v = view_row(F, row, goals)) views.push_back(std::move(*v));
                }

    const SearchContext ctx{F, goals, DigitAlphabet::parse(probe_digits), views};

    if (threads <= 1) {
        for (std::size_t i = 0; i < views.size(); ++i) {
            if (auto s = complete_from(ctx, i)) return *s;
        }
        throw SearchExhausted("no GF(" + std::to_string(base) +
                              ") scheme satisfies the requested goals");
    }

    // Workers claim first-row candidates in lexicographic order; the winner
    // is the completion with the smallest first-row index, which is exactly
    // the single-threaded answer.
    std::atomic<std::size_t> cursor{0};
    std::atomic<std::size_t> best_idx{SIZE_MAX};
    std::mutex best_mu;
    std::optional<Scheme> best;
    auto worker = [&]() {
        while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= views.size() || i > best_idx.load()) break;
            if (auto s = complete_from(ctx, i)) {
                std::lock_guard<std::mutex> lock(best_mu);
                if (i < best_idx.load()) {
                    best_idx.store(i);
                    best = *s;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (best) return *best;
    throw SearchExhausted("no GF(" + std::to_string(base) +
                          ") scheme satisfies the requested goals");
}

FourAlgorismBuild build_four_algorism_ex(const DigitAlphabet& alphabet, const GoalSet& goals,
                                         int threads) {
    const int n = alphabet.size();
    if (n < 3 || n > 5) {
        throw Unsupported("four-digit squares are built over 3..5-digit alphabets, got " +
                          alphabet.digits());
    }
    FourAlgorismBuild build;
    build.scheme = search_scheme(n, goals, threads);
    build.square = assemble_square(build.scheme, alphabet);
    return build;
}

Square build_four_algorism(const DigitAlphabet& alphabet, const GoalSet& goals, int threads) {
    return build_four_algorism_ex(alphabet, goals, threads).square;
}

}  // namespace updown
