#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"
#include "updown/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = updown::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// A scratch file that cleans up after itself.
struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / name) {}
    ~TempFile() { std::error_code ec; fs::remove(path, ec); }
    std::string str() const { return path.string(); }
    std::string slurp() const {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    void write(const std::string& text) const {
        std::ofstream out(path);
        out << text;
    }
};

} // namespace

TEST_CASE("sums prints both expected sums") {
    RunResult r = run_cli({"sums", "--alphabet", "169", "--width", "4", "--order", "9"});
    CHECK(r.code == 0);
    CHECK(r.out == "S1=53328 S2=414976074\n");

    r = run_cli({"sums", "--alphabet", "01269", "--width", "4", "--order", "25"});
    CHECK(r.code == 0);
    CHECK(r.out == "S1=99990 S2=688808890\n");

    r = run_cli({"sums", "--alphabet", "012", "--width", "2", "--order", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "S1=33 S2=565\n");
}

TEST_CASE("sums fails cleanly when the totals do not divide") {
    RunResult r = run_cli({"sums", "--alphabet", "169", "--width", "2", "--order", "3"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("error:") == 0);
}

TEST_CASE("flag errors and unknown commands exit 2") {
    CHECK(run_cli({"sums", "--alphabet", "169"}).code == 2);        // missing flags
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);                                   // no subcommand
    CHECK(run_cli({"sums", "--alphabet", "169x", "--width", "2", "--order", "3"}).code == 2);
    CHECK(run_cli({"build", "--alphabet", "012", "--order", "9", "--goals", "sideways"}).code ==
          2);
    CHECK(run_cli({"build", "--alphabet", "012", "--order", "4"}).code == 2); // shape mismatch
}

TEST_CASE("help is not an error") {
    RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sums") != std::string::npos);
    CHECK(r.out.find("equation") != std::string::npos);
}

TEST_CASE("build writes a square that verify accepts") {
    TempFile file("updown-cli-test-3x3.txt");
    RunResult build = run_cli({"build", "--alphabet", "012", "--order", "3", "--out", file.str()});
    CHECK(build.code == 0);
    CHECK(build.err.find("updown verified") != std::string::npos);
    CHECK(file.slurp().find("order=3 width=2 alphabet=012\n") == 0);

    RunResult verify = run_cli({"verify", file.str()});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("magic:                yes") != std::string::npos);
    CHECK(verify.out.find("universal:            yes") != std::string::npos);
    CHECK(verify.out.find("failures:             none") != std::string::npos);
}

TEST_CASE("build is deterministic") {
    RunResult a = run_cli({"build", "--alphabet", "0129", "--order", "4"});
    RunResult b = run_cli({"build", "--alphabet", "0129", "--order", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("semi-magic outcome warns but still writes the square") {
    TempFile file("updown-cli-test-169.txt");
    RunResult build = run_cli({"build", "--alphabet", "169", "--order", "3", "--goals",
                               "magic,updown", "--out", file.str()});
    CHECK(build.code == 0); // the square is still useful, the warning explains
    CHECK(build.err.find("warning: square is semi-magic") != std::string::npos);
    CHECK(build.err.find("178") != std::string::npos);
    CHECK(build.err.find("196") != std::string::npos);

    RunResult verify = run_cli({"verify", file.str()});
    CHECK(verify.code == 1); // parses fine, but not magic
    CHECK(verify.out.find("semi_magic:           yes") != std::string::npos);
    CHECK(verify.out.find("diag[0] s1=178") != std::string::npos);
}

TEST_CASE("updown goal is infeasible for alphabets with unrotatable digits") {
    RunResult r = run_cli({"build", "--alphabet", "014", "--order", "3"});
    CHECK(r.code == 3);
    CHECK(r.err.find("no 180-degree rotation") != std::string::npos);
}

TEST_CASE("nine-by-nine build reports all bimagic flags in JSON") {
    TempFile file("updown-cli-test-9x9.txt");
    RunResult build = run_cli({"build", "--alphabet", "012", "--order", "9", "--out", file.str()});
    CHECK(build.code == 0);
    CHECK(build.err.find("scheme: GF(3)") != std::string::npos);

    RunResult verify = run_cli({"verify", file.str(), "--json"});
    CHECK(verify.code == 0);
    auto j = nlohmann::json::parse(verify.out);
    CHECK(j["order"] == 9);
    CHECK(j["width"] == 4);
    CHECK(j["alphabet"] == "012");
    CHECK(j["s1"] == 9999);
    CHECK(j["s2"] == 17169495);
    CHECK(j["flags"]["bimagic"] == true);
    CHECK(j["flags"]["block_magic"] == true);
    CHECK(j["flags"]["balanced"] == true);
    CHECK(j["flags"]["pair_orthogonal"] == true);
    CHECK(j["flags"]["upside_down_closed"] == true);
    CHECK(j["flags"]["combination_complete"] == true);
    CHECK(j["expected"]["s1"] == 9999);
    CHECK(j["expected"]["s2"] == 17169495);
    CHECK(j["rotated"]["s1"] == 9999);
    CHECK(j["rotated"]["s2"] == 17169495);
    CHECK(j["failures"].empty());

    // Keys keep their documented order so reports diff cleanly.
    const std::string text = verify.out;
    CHECK(text.find("\"order\"") < text.find("\"width\""));
    CHECK(text.find("\"width\"") < text.find("\"alphabet\""));
    CHECK(text.find("\"alphabet\"") < text.find("\"s1\""));
    CHECK(text.find("\"s2\"") < text.find("\"flags\""));
    CHECK(text.find("\"flags\"") < text.find("\"expected\""));
    CHECK(text.find("\"expected\"") < text.find("\"rotated\""));
    CHECK(text.find("\"rotated\"") < text.find("\"failures\""));
}

TEST_CASE("verify flags a hand-edited square") {
    TempFile file("updown-cli-test-edited.txt");
    file.write("order=3 width=2 alphabet=012\n"
               "10 00 01\n"
               "02 11 20\n"
               "21 22 12\n"); // rows 0 and 2 tampered with
    RunResult verify = run_cli({"verify", file.str(), "--json"});
    CHECK(verify.code == 1);
    auto j = nlohmann::json::parse(verify.out);
    CHECK(j["flags"]["semi_magic"] == false);
    REQUIRE(j["failures"].size() == 2);
    CHECK(j["failures"][0]["family"] == "row");
    CHECK(j["failures"][0]["index"] == 0);
    CHECK(j["failures"][0]["s1"] == 11);
    CHECK(j["failures"][1]["index"] == 2);
}

TEST_CASE("malformed square files exit 2 with a line number") {
    TempFile file("updown-cli-test-bad.txt");
    file.write("order=3 width=4 alphabet=012\n"
               "100 220 010\n"
               "020 110 200\n"
               "210 000 120\n"); // width 3 tokens under a width=4 header
    RunResult verify = run_cli({"verify", file.str()});
    CHECK(verify.code == 2);
    CHECK(verify.err.find("error: line 2") != std::string::npos);

    CHECK(run_cli({"verify", "/nonexistent/updown.txt"}).code == 2);
}

TEST_CASE("rotate twice restores the file byte for byte") {
    TempFile original("updown-cli-test-rot0.txt");
    TempFile once("updown-cli-test-rot1.txt");
    TempFile twice("updown-cli-test-rot2.txt");
    CHECK(run_cli({"build", "--alphabet", "0129", "--order", "4", "--out", original.str()}).code ==
          0);
    CHECK(run_cli({"rotate", original.str(), "--out", once.str()}).code == 0);
    CHECK(run_cli({"rotate", once.str(), "--out", twice.str()}).code == 0);
    CHECK(original.slurp() == twice.slurp());
    CHECK(original.slurp() != once.slurp());
    // The rotated square lives on the rotated alphabet.
    CHECK(once.slurp().find("alphabet=0126") != std::string::npos);
}

TEST_CASE("mirror of the 3x3 square is semi-magic, not magic") {
    TempFile original("updown-cli-test-mir0.txt");
    TempFile mirrored("updown-cli-test-mir1.txt");
    CHECK(run_cli({"build", "--alphabet", "012", "--order", "3", "--out", original.str()}).code ==
          0);
    CHECK(run_cli({"mirror", original.str(), "--out", mirrored.str()}).code == 0);
    CHECK(mirrored.slurp().find("alphabet=015") != std::string::npos);
    // Reflection preserves rows and columns but rebuilds both diagonals from
    // cells whose digit order reversed: the mirrored square is semi-magic.
    RunResult verify = run_cli({"verify", mirrored.str()});
    CHECK(verify.code == 1);
    CHECK(verify.out.find("semi_magic:           yes") != std::string::npos);
    CHECK(verify.out.find("magic:                no") != std::string::npos);

    TempFile back("updown-cli-test-mir2.txt");
    CHECK(run_cli({"mirror", mirrored.str(), "--out", back.str()}).code == 0);
    CHECK(back.slurp() == original.slurp());
}

TEST_CASE("transform commands list every offending cell") {
    TempFile file("updown-cli-test-blockers.txt");
    file.write("order=2 width=1 alphabet=14\n"
               "1 4\n"
               "4 1\n");
    RunResult rot = run_cli({"rotate", file.str()});
    CHECK(rot.code == 4);
    CHECK(rot.err.find("cell (0,1) \"4\": digit '4' has no 180-degree rotation") !=
          std::string::npos);
    CHECK(rot.err.find("cell (1,0)") != std::string::npos);

    TempFile semi("updown-cli-test-blockers2.txt");
    semi.write("order=2 width=1 alphabet=69\n"
               "6 9\n"
               "9 6\n");
    RunResult mir = run_cli({"mirror", semi.str()});
    CHECK(mir.code == 4);
    CHECK(mir.err.find("no mirror image") != std::string::npos);
}

TEST_CASE("render draws the square file") {
    TempFile file("updown-cli-test-render.txt");
    file.write("order=1 width=2 alphabet=01\n"
               "11\n");
    RunResult r = run_cli({"render", file.str()});
    CHECK(r.code == 0);
    CHECK(r.out == "\n  |   |\n  |   |\n");

    CHECK(run_cli({"render", file.str(), "--scale", "9"}).code == 2); // out of range
}

TEST_CASE("equation verdicts map to exit codes") {
    RunResult valid = run_cli({"equation", "6+9=9+6"});
    CHECK(valid.code == 0);
    CHECK(valid.out.find("original: 6+9=9+6") != std::string::npos);
    CHECK(valid.out.find("verdict: valid") != std::string::npos);

    RunResult invalid = run_cli({"equation", "10+1=11"});
    CHECK(invalid.code == 1);
    CHECK(invalid.out.find("rotated: 11=1+01") != std::string::npos);
    CHECK(invalid.out.find("holds: no (left 11, right 2)") != std::string::npos);
    CHECK(invalid.out.find("verdict: invalid") != std::string::npos);

    RunResult nonrot = run_cli({"equation", "3+1=4"});
    CHECK(nonrot.code == 4);
    CHECK(nonrot.out.find("verdict: non-rotatable (digit '3' at position 0)") !=
          std::string::npos);

    RunResult syntax = run_cli({"equation", "1+=2"});
    CHECK(syntax.code == 2);
    CHECK(syntax.err.find("error:") != std::string::npos);
    CHECK(syntax.err.find("1+=2\n  ^") != std::string::npos);
}
