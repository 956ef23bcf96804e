#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "vbq/cli.hpp"
#include "vbq/structure_io.hpp"

using namespace vbq;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "vbq");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    auto dir = fs::temp_directory_path() / "vbq_cli_test";
    fs::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

const std::string& swap3() {
    static auto p = write_temp("swap3.vbq", format_structure(swap_operator(3), Permutation{1, 2, 0}));
    return p;
}
const std::string& lin3f() {
    static auto p = write_temp("lin3f.vbq", format_structure(test::linear3(), test::shift(3, 1)));
    return p;
}
const std::string& ident2() {
    static auto p = write_temp("id2.vbq", "vbq\nsize 2\nR1\n0 0\n1 1\nR2\n0 1\n0 1\n");
    return p;
}

}  // namespace

TEST_CASE("check") {
    auto ok = run({"check", swap3()});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("valid virtual biquandle") != std::string::npos);
    auto bad = run({"check", ident2()});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(run({"check", "/nonexistent.vbq"}).code == 2);
    CHECK(run({"check", write_temp("junk.vbq", "vbq\nsize two\n")}).code == 2);
}

TEST_CASE("vr") {
    auto r = run({"vr", lin3f()});
    CHECK(r.code == 0);
    CHECK(r.out == "vbq\nsize 3\nR1\n1 2 0\n1 2 0\n1 2 0\nR2\n1 0 2\n0 2 1\n2 1 0\nf\n1 2 0\n");
    CHECK(run({"vr", ident2()}).code == 1);
}

TEST_CASE("color") {
    CHECK(run({"color", lin3f(), "--braid", "s1 s1"}).out == "3\n");
    CHECK(run({"color", swap3(), "--gauss", "U1+O2+|O1+U2+"}).out == "9\n");
    CHECK(run({"color", lin3f(), "--braid", "", "--strands", "2"}).out == "9\n");
    auto w = run({"color", lin3f(), "--braid", "s1", "--witnesses"});
    CHECK(w.out == "3\n0 0\n1 1\n2 2\n");
    CHECK(run({"color", lin3f(), "--braid", "s1", "--gauss", "U1+O1+"}).code == 2);
    CHECK(run({"color", lin3f()}).code == 2);
    CHECK(run({"color", lin3f(), "--braid", "s1", "--rep", "chi"}).code == 2);
    CHECK(run({"color", lin3f(), "--braid", "q1"}).code == 2);
    CHECK(run({"color", lin3f(), "--braid", "", "--strands", "12", "--budget", "1000"}).code == 3);
    CHECK(run({"color", lin3f(), "--gauss", "||||||||", "--budget", "10"}).code == 3);
}

TEST_CASE("bridge") {
    auto r = run({"bridge", lin3f(), "--braid", "v1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("phi-count 3") != std::string::npos);
    auto f = run({"bridge", swap3(), "--fuzz", "20", "--seed", "4"});
    CHECK(f.code == 0);
    CHECK(f.out.find("fuzz 20 braids, 0 mismatches") != std::string::npos);
    CHECK(run({"bridge", swap3()}).code == 2);
}

TEST_CASE("present") {
    CHECK(run({"present", "--braid", "v1", "--rep", "phi"}).out == "# generators 2\nf^-1(x2) = x1\nf^1(x1) = x2\n");
    CHECK(run({"present", "--braid", "s1", "--rep", "psi"}).out ==
          "# generators 2\nR1(x1,f^1(x2)) = x1\nR2(f^-1(x1),x2) = x2\n");
    CHECK(run({"present", "--gauss", "O1+U1+"}).out == "# generators 2\nx2 = R1(x2,f^1(x1))\nx1 = R2(f^-1(x2),x1)\n");
    CHECK(run({"present", "--gauss", "O1+U1-"}).code == 2);
}

TEST_CASE("enum") {
    auto r = run({"enum", "--size", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# 2 biquandles of size 2\n") != std::string::npos);
    CHECK(run({"enum", "--size", "3", "--iso"}).out.find("# 15 biquandles of size 3 up to isomorphism") !=
          std::string::npos);
    CHECK(run({"enum", "--size", "3", "--virtual"}).out.find("# 90 virtual biquandles") != std::string::npos);
    CHECK(run({"enum", "--size", "5"}).code == 2);
    CHECK(run({"enum", "--size", "6", "--allow-large"}).code == 2);
    CHECK(run({"enum"}).code == 2);
    auto cat = parse_catalog(run({"enum", "--size", "3", "--virtual", "--iso"}).out);
    CHECK(cat.size() == 36);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"color", lin3f(), "--braid", "s1", "--workers", "0"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is byte-identical across runs and worker counts") {
    std::vector<std::vector<std::string>> cmds{
        {"color", swap3(), "--braid", "s1 v2 S1 s3 v1", "--witnesses"},
        {"bridge", lin3f(), "--fuzz", "10", "--seed", "9", "--strands", "4"},
        {"enum", "--size", "3", "--virtual", "--iso"},
        {"color", lin3f(), "--gauss", "U1+O2+|O1+U2+", "--witnesses"},
    };
    for (const auto& cmd : cmds) {
        auto base = run(cmd);
        for (const char* w : {"1", "2", "8"})
            for (int rep = 0; rep < 2; ++rep) {
                auto c = cmd;
                c.insert(c.end(), {"--workers", w});
                auto r = run(c);
                CHECK(r.code == base.code);
                CHECK(r.out == base.out);
            }
    }
}
