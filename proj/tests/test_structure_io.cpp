#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "vbq/enumeration.hpp"
#include "vbq/structure_io.hpp"

using namespace vbq;

namespace {

const char* kLinearShift =
    "vbq\n"
    "size 3\n"
    "R1\n"
    "0 1 2\n"
    "0 1 2\n"
    "0 1 2\n"
    "R2\n"
    "0 2 1\n"
    "2 1 0\n"
    "1 0 2\n"
    "f\n"
    "1 2 0\n";

}  // namespace

TEST_CASE("parse a virtual structure") {
    auto file = parse_structure(kLinearShift);
    CHECK(file.op == test::linear3());
    REQUIRE(file.f);
    CHECK(*file.f == test::shift(3, 1));
}

TEST_CASE("writer reproduces the canonical text") {
    auto file = parse_structure(kLinearShift);
    CHECK(format_structure(file.op, file.f) == kLinearShift);
}

TEST_CASE("missing f block means identity and is not written back") {
    auto text = format_structure(swap_operator(2));
    CHECK(text == "vbq\nsize 2\nR1\n0 1\n0 1\nR2\n0 0\n1 1\n");
    auto file = parse_structure(text);
    CHECK_FALSE(file.f);
    CHECK(file.f_or_identity() == Permutation{0, 1});
}

TEST_CASE("comments and blank lines are ignored") {
    std::string text = std::string("# header\n\n") + kLinearShift + "\n# trailing\n";
    CHECK(parse_structure(text).op == test::linear3());
}

TEST_CASE("malformed files are parse errors") {
    const char* bad[] = {
        "",
        "vbq\nsize 2\nR1\n0 1\n0 1\nR2\n0 0\n",               // short R2
        "vbq\nsize 2\nR1\n0 1\n0 1 1\nR2\n0 0\n1 1\n",        // long row
        "vbq\nsize 2\nR1\n0 1\n0 5\nR2\n0 0\n1 1\n",          // out of range
        "vbq\nsize 2\nR1\n0 x\n0 1\nR2\n0 0\n1 1\n",          // not an integer
        "vbq\nsize 0\n",                                      // empty carrier
        "biquandle\nsize 1\nR1\n0\nR2\n0\n",                  // wrong magic
        "vbq\nsize 1\nR1\n0\nR2\n0\nf\n0 0\n",                // f too long
        "vbq\nsize 1\nR1\n0\nR2\n0\nextra\n",                 // trailing junk
    };
    for (const char* t : bad) {
        CAPTURE(t);
        CHECK_THROWS_AS(parse_structure(t), ParseError);
    }
}

TEST_CASE("parse errors carry a line number") {
    try {
        parse_structure("vbq\nsize 2\nR1\n0 1\n0 9\nR2\n0 0\n1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 5") != std::string::npos);
    }
}

TEST_CASE("write then read is the identity on every structure of size at most 3") {
    int seen = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& s : enumerate_virtual(n)) {
            for (const auto& f : {std::optional<Permutation>{}, std::optional<Permutation>{s.f}}) {
                auto text = format_structure(s.op, f);
                auto back = parse_structure(text);
                CHECK(back.op == s.op);
                CHECK(back.f == f);
                CHECK(format_structure(back.op, back.f) == text);
                ++seen;
            }
        }
    CHECK(seen == 2 * (1 + 4 + 90));
}

TEST_CASE("catalog of several structures") {
    std::string text = "# two entries\n" + format_structure(swap_operator(2)) + "\n" + kLinearShift;
    auto cat = parse_catalog(text);
    REQUIRE(cat.size() == 2);
    CHECK(cat[0].op == swap_operator(2));
    CHECK(cat[1].f == test::shift(3, 1));
    CHECK(parse_catalog("# nothing\n").empty());
}

TEST_CASE("missing file") {
    CHECK_THROWS_AS(read_structure_file("/nonexistent/structure.vbq"), StructureError);
}
