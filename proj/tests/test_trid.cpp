#include <doctest.h>

#include "trisect/search.hpp"
#include "trisect/svg.hpp"
#include "trisect/trid.hpp"

using namespace trisect;

static const char* kCp2Fixture =
    "trid 1\n"
    "genus 1\n"
    "family alpha\n"
    "curve m: a1@1\n"
    "family beta\n"
    "curve l: b1@1\n"
    "family gamma\n"
    "curve t: a1@2 b1@2\n";

TEST_CASE("parse the CP2 fixture") {
    auto d = parse_trisection(kCp2Fixture);
    CHECK(d.genus() == 1);
    CHECK(d.arrangement.canonical_form() == catalog("CP2+").arrangement.canonical_form());
}

TEST_CASE("parse errors carry positions") {
    SUBCASE("duplicate slot") {
        const char* bad =
            "trid 1\ngenus 1\nfamily alpha\ncurve m: a1@1\nfamily beta\ncurve l: A1@2\n"
            "family gamma\ncurve t: b1@1\n";
        CHECK_THROWS_AS(parse_trisection(bad), ValidationError);
    }
    SUBCASE("unknown segment") {
        const char* bad = "trid 1\ngenus 1\nfamily alpha\ncurve m: a2@1\nfamily beta\n"
                          "curve l: b1@1\nfamily gamma\ncurve t: b1@2\n";
        CHECK_THROWS_AS(parse_trisection(bad), ParseError);
    }
    SUBCASE("bad header") {
        CHECK_THROWS_AS(parse_trid("trid 2\ngenus 0\n"), ParseError);
    }
    SUBCASE("slot gap rejected") {
        const char* bad = "trid 1\ngenus 1\nfamily alpha\ncurve m: a1@2\nfamily beta\n"
                          "curve l: b1@1\nfamily gamma\ncurve t: b1@2\n";
        CHECK_THROWS_AS(parse_trisection(bad), ValidationError);
    }
    SUBCASE("wrong family names") {
        const char* bad = "trid 1\ngenus 0\nfamily alpha\nfamily beta\n";
        CHECK_THROWS_AS(parse_trid(bad), ParseError);
    }
}

TEST_CASE("empty genus-0 file is the trivial trisection") {
    const char* s0 = "trid 1\ngenus 0\nfamily alpha\nfamily beta\nfamily gamma\n";
    auto d = parse_trisection(s0);
    CHECK(d.genus() == 0);
    CHECK(d.arrangement.canonical_form() == catalog("S0").arrangement.canonical_form());
    CHECK(serialize(d) == s0);
}

TEST_CASE("heegaard files use first/second") {
    const char* text = "trid 1\ngenus 1\nfamily first\ncurve m: a1@1\nfamily second\n"
                       "curve l: b1@1\n";
    auto parsed = parse_trid(text);
    REQUIRE(std::holds_alternative<HeegaardDiagram>(parsed));
    auto& h = std::get<HeegaardDiagram>(parsed);
    CHECK(h.arrangement.genus() == 1);
    CHECK(serialize(h) == text);
}

TEST_CASE("serialize is stable under reparse") {
    for (const char* name : {"S0", "S100", "CP2+", "CP2-", "S1xS3", "Sk(1,1,0)", "Sk(2,0,1)"}) {
        CAPTURE(name);
        auto d = catalog(name);
        auto text = serialize(d);
        auto re = parse_trisection(text);
        CHECK(re.arrangement.canonical_form() == d.arrangement.canonical_form());
        CHECK(serialize(re) == text);
    }
}

TEST_CASE("round trip through scrambles") {
    auto d = catalog_sk(1, 1, 0);
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        auto r = scramble(d, 2, seed);
        auto text = serialize(r.diagram);
        auto re = parse_trisection(text);
        CHECK(re.arrangement.canonical_form() == r.diagram.arrangement.canonical_form());
        CHECK(serialize(re) == text);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    const char* text = "# a diagram\ntrid 1\n\ngenus 1  # the torus\nfamily alpha\n"
                       "curve m: a1@1\nfamily beta\ncurve l: b1@1 # dual\nfamily gamma\n"
                       "curve t: a1@2 b1@2\n";
    auto d = parse_trisection(text);
    CHECK(d.arrangement.canonical_form() == catalog("CP2+").arrangement.canonical_form());
}

TEST_CASE("svg output is deterministic and well-formed") {
    auto d = catalog("CP2+");
    auto svg1 = render_svg(d.arrangement);
    auto svg2 = render_svg(d.arrangement);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") == 0);
    CHECK(svg1.find("</svg>") != std::string::npos);
    CHECK(svg1.find("a1") != std::string::npos);
    auto s0 = render_svg(catalog("S0").arrangement);
    CHECK(s0.find("genus 0") != std::string::npos);
}
