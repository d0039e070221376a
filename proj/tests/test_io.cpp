#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ideal/io.hpp"
#include "support.hpp"

using namespace ideal;

TEST_CASE("tri files round trip byte for byte") {
    for (const char* name : {"fig8.tri", "gieseking.tri", "fig8-inflated.tri", "gieseking-inflated.tri", "l41-four.tri",
                             "l41-one.tri", "whitehead-x.tri"}) {
        Triangulation t = oracle::load(name);
        std::string a = serialize_tri(t);
        std::string b = serialize_tri(parse_tri_string(a));
        CHECK(a == b);
        CHECK(parse_tri_string(a) == t);
    }
}

TEST_CASE("golden arrays carry the expected boundary") {
    CHECK(oracle::load("fig8-inflated.tri").boundary_face_count() == 2);
    CHECK(oracle::load("gieseking-inflated.tri").boundary_face_count() == 2);
    CHECK(oracle::load("empty.tri").size() == 0);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_tri_string(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("tet a\n") == 1);
    CHECK(line_of("tri x\ntet a\ntet a\n") == 3);
    CHECK(line_of("tri x\ntet a\nglue a 012 b 012\n") == 3);
    CHECK(line_of("tri x\ntet a\ntet b\nglue a 012 b 01\n") == 4);
    CHECK(line_of("tri x\ntet a\ntet b\nglue a 012 b 012\nglue a 012 b 013\n") == 5);
    CHECK(line_of("tri x\n# comment\nbogus\n") == 3);
    CHECK(line_of("") == 1);
    CHECK(line_of("tri x # trailing\ntet a # first\n") == 0);
}

TEST_CASE("coordinates round trip") {
    NormalCoords c(2);
    c.tri(0, 1) = 2;
    c.quad(1, 2) = 1;
    std::istringstream in(serialize_coords(c));
    CHECK(parse_coords(in) == c);
}

TEST_CASE("frame files round trip") {
    Triangulation t = oracle::load("fig8.tri");
    Links links = build_links(t);
    auto fr = read_frames(oracle::fixture("fig8-xi1.frame"), links);
    REQUIRE(fr.size() == 1);
    std::istringstream in(serialize_frames(fr, links));
    auto again = parse_frames(in, links);
    CHECK(serialize_frames(again, links) == serialize_frames(fr, links));
    std::istringstream bad("frame t0:0\nbranch +t9:012:0\n");
    CHECK_THROWS_AS(parse_frames(bad, links), ParseError);
}
