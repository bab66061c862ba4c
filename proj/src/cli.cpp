#include "updown/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "updown/construct.hpp"
#include "updown/equation.hpp"
#include "updown/render.hpp"
#include "updown/report.hpp"
#include "updown/square_io.hpp"
#include "updown/verify.hpp"

namespace updown::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;
constexpr int kExhausted = 3;
constexpr int kNotTransformable = 4;

struct BuildGoals {
    GoalSet scheme;          // families the scheme search must honour
    bool want_magic = false;
    bool want_blocks = false;
    bool want_pandiag = false;
    bool want_updown = false;
};

BuildGoals parse_goals(const std::string& text) {
    BuildGoals g;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token == "magic" || token == "bimagic") {
            g.scheme.diag = g.scheme.antidiag = true;
            g.want_magic = true;
        } else if (token == "blocks") {
            g.scheme.blocks = true;
            g.want_blocks = true;
        } else if (token == "pandiag") {
            g.scheme.pandiag = true;
            g.want_pandiag = true;
        } else if (token == "updown") {
            g.want_updown = true;
        } else {
            throw Error("unknown goal \"" + token +
                        "\" (expected magic, bimagic, blocks, pandiag, updown)");
        }
    }
    return g;
}

void emit_square(const Square& sq, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        write_square(out, sq);
    } else {
        save_square(out_path, sq);
    }
}

// List every cell a transform would reject, for actionable diagnostics.
int report_blockers(const Square& sq, bool (*ok)(char), const char* verb, std::ostream& err) {
    int shown = 0, total = 0;
    for (int r = 0; r < sq.order; ++r) {
        for (int c = 0; c < sq.order; ++c) {
            for (char d : sq.at(r, c)) {
                if (ok(d)) continue;
                ++total;
                if (shown < 20) {
                    err << "cell (" << r << "," << c << ") \"" << sq.at(r, c) << "\": digit '" << d
                        << "' " << verb << "\n";
                    ++shown;
                }
                break;
            }
        }
    }
    if (total > shown) err << "... and " << (total - shown) << " more cells\n";
    return total;
}

int cmd_sums(const std::string& alpha, int width, int order, std::ostream& out) {
    const SumPair sums = expected_sums(DigitAlphabet::parse(alpha), width, order);
    out << "S1=" << sums.s1 << " S2=" << sums.s2 << "\n";
    return kOk;
}

int cmd_build(const std::string& alpha, int order, const std::string& goals_text, int threads,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
    const DigitAlphabet alphabet = DigitAlphabet::parse(alpha);
    const int n = alphabet.size();
    const bool two_digit = order == n;
    const bool four_digit = order == n * n;
    if (!two_digit && !four_digit) {
        err << "order " << order << " fits neither the two-digit (order " << n
            << ") nor the four-digit (order " << n * n << ") construction for alphabet "
            << alphabet.digits() << "\n";
        return kBadInput;
    }
    std::string goals_effective = goals_text;
    if (goals_effective.empty()) {
        goals_effective = two_digit ? "magic,updown" : "bimagic,blocks,updown";
    }
    const BuildGoals goals = parse_goals(goals_effective);

    Square sq;
    if (two_digit) {
        sq = build_two_algorism(alphabet);
        if (goals.want_blocks || goals.want_pandiag) {
            err << "note: blocks/pandiag goals do not steer the two-digit construction\n";
        }
    } else {
        const FourAlgorismBuild built = build_four_algorism_ex(alphabet, goals.scheme, threads);
        err << "scheme: " << built.scheme.to_string() << "\n";
        sq = built.square;
    }
    const PropertyReport rep = classify(sq);
    if (goals.want_magic && !rep.magic) {
        const auto diag = line_profile(sq, LineFamily::main_diag)[0];
        const auto anti = line_profile(sq, LineFamily::anti_diag)[0];
        err << "warning: square is " << (rep.semi_magic ? "semi-magic" : "not magic")
            << ", not magic: the fixed diagonals sum to " << diag.s1 << " and " << anti.s1
            << " against row sum " << (rep.s1 ? std::to_string(*rep.s1) : "-")
            << " (the middle alphabet digit is not the digit mean)\n";
    }
    if (goals.want_updown) {
        if (!rotatable(sq)) {
            err << "goal updown is unattainable: alphabet " << alphabet.digits()
                << " contains digits with no 180-degree rotation\n";
            return kExhausted;
        }
        if (!rep.upside_down_closed) {
            err << "goal updown failed: the rotated square loses properties\n";
            return kExhausted;
        }
        err << "updown verified: rotated square keeps the achieved level";
        if (rep.rotated_sums && rep.rotated_sums->s1) {
            err << " (s1=" << *rep.rotated_sums->s1;
            if (rep.rotated_sums->s2) err << ", s2=" << *rep.rotated_sums->s2;
            err << ")";
        }
        err << "\n";
    }
    emit_square(sq, out_path, out);
    return kOk;
}

int cmd_verify(const std::string& path, bool json, std::ostream& out) {
    const Square sq = load_square(path);
    const PropertyReport rep = classify(sq);
    if (json) {
        out << report_json(sq, rep).dump(2) << "\n";
    } else {
        out << report_text(sq, rep);
    }
    return rep.magic ? kOk : kFailed;
}

int cmd_rotate(const std::string& path, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
    const Square sq = load_square(path);
    try {
        emit_square(rotate180(sq), out_path, out);
    } catch (const NonRotatable&) {
        report_blockers(sq, strobo_rotatable, "has no 180-degree rotation", err);
        return kNotTransformable;
    }
    return kOk;
}

int cmd_mirror(const std::string& path, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
    const Square sq = load_square(path);
    try {
        emit_square(mirror_square(sq), out_path, out);
    } catch (const NonMirrorable&) {
        auto ok = [](char d) { return mirrorable(d); };
        report_blockers(sq, ok, "has no mirror image", err);
        return kNotTransformable;
    }
    return kOk;
}

int cmd_render(const std::string& path, int scale, std::ostream& out) {
    out << render_seven_segment(load_square(path), scale);
    return kOk;
}

int cmd_equation(const std::string& text, std::ostream& out, std::ostream& err) {
    Equation eq;
    try {
        eq = parse_equation(text);
    } catch (const EquationSyntaxError& e) {
        err << "error: " << e.what() << "\n" << text << "\n"
            << std::string(e.position, ' ') << "^\n";
        return kBadInput;
    }
    const Evaluation base = evaluate(eq);
    out << "original: " << eq.text << "\n";
    out << "  holds: " << (base.holds() ? "yes" : "no") << " (left " << base.left << ", right "
        << base.right << ")\n";
    try {
        const Equation rotated = rotate_equation(eq);
        const Evaluation rot = evaluate(rotated);
        out << "rotated: " << rotated.text << "\n";
        out << "  holds: " << (rot.holds() ? "yes" : "no") << " (left " << rot.left << ", right "
            << rot.right << ")\n";
        if (base.holds() && rot.holds()) {
            out << "verdict: valid\n";
            return kOk;
        }
        out << "verdict: invalid\n";
        return kFailed;
    } catch (const NonRotatable& e) {
        out << "verdict: non-rotatable (digit '" << e.digit << "' at position " << e.position
            << ")\n";
        return kNotTransformable;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"construct, transform and verify upside-down magic squares"};
    app.require_subcommand(1);

    std::string alpha, goals_text, path, out_path, eq_text;
    int width = 4, order = 0, threads = 1, scale = 1;
    bool json = false;

    auto* sums = app.add_subcommand("sums", "expected line sums for a combination-complete square");
    sums->add_option("--alphabet", alpha, "digit alphabet, e.g. 169")->required();
    sums->add_option("--width", width, "digits per cell")->required();
    sums->add_option("--order", order, "square order")->required();

    auto* build = app.add_subcommand("build", "construct a square and print it");
    build->add_option("--alphabet", alpha, "digit alphabet")->required();
    build->add_option("--order", order, "square order (alphabet size or its square)")->required();
    build->add_option("--goals", goals_text,
                      "comma list of magic,bimagic,blocks,pandiag,updown "
                      "(default: magic,updown or bimagic,blocks,updown)");
    build->add_option("--threads", threads, "search worker threads")
        ->check(CLI::Range(1, 64));
    build->add_option("--out", out_path, "write the square to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "classify a square file");
    verify->add_option("file", path, "square file")->required();
    verify->add_flag("--json", json, "machine-readable report");

    auto* rotate = app.add_subcommand("rotate", "rotate a square file 180 degrees");
    rotate->add_option("file", path, "square file")->required();
    rotate->add_option("--out", out_path, "write the result to a file instead of stdout");

    auto* mirror = app.add_subcommand("mirror", "mirror a square file left-right");
    mirror->add_option("file", path, "square file")->required();
    mirror->add_option("--out", out_path, "write the result to a file instead of stdout");

    auto* render = app.add_subcommand("render", "draw a square file as seven-segment ASCII art");
    render->add_option("file", path, "square file")->required();
    render->add_option("--scale", scale, "segment length in characters")->check(CLI::Range(1, 8));

    auto* equation = app.add_subcommand("equation", "check an upside-down equation");
    equation->add_option("text", eq_text, "e.g. \"69+11=80\"")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("updown");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (sums->parsed()) return cmd_sums(alpha, width, order, out);
        if (build->parsed()) return cmd_build(alpha, order, goals_text, threads, out_path, out, err);
        if (verify->parsed()) return cmd_verify(path, json, out);
        if (rotate->parsed()) return cmd_rotate(path, out_path, out, err);
        if (mirror->parsed()) return cmd_mirror(path, out_path, out, err);
        if (render->parsed()) return cmd_render(path, scale, out);
        if (equation->parsed()) return cmd_equation(eq_text, out, err);
    } catch (const NonRotatable& e) {
        err << "error: " << e.what() << "\n";
        return kNotTransformable;
    } catch (const NonMirrorable& e) {
        err << "error: " << e.what() << "\n";
        return kNotTransformable;
    } catch (const SearchExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kExhausted;
    } catch (const EquationSyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const SquareParseError& e) {
        err << "error: line " << e.line << ": " << e.what() << "\n";
        return kBadInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    err << "no subcommand given\n";
    return kBadInput;
}

}  // namespace updown::cli
