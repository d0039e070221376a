#include <doctest.h>

#include "ideal/isomorphism.hpp"
#include "support.hpp"

using namespace ideal;

TEST_CASE("relabelled copies are isomorphic") {
    for (const char* n : {"fig8.tri", "gieseking.tri", "fig8-inflated.tri", "l41-four.tri", "whitehead-z.tri"}) {
        Triangulation t = oracle::load(n);
        for (unsigned seed = 1; seed <= 5; ++seed) {
            Triangulation r = oracle::shuffle(t, seed);
            auto m = isomorphic(t, r);
            REQUIRE(m.has_value());
            CHECK(verify_iso(t, r, *m));
        }
    }
}

TEST_CASE("different triangulations are told apart") {
    CHECK_FALSE(isomorphic(oracle::load("fig8.tri"), oracle::load("whitehead-x.tri")));
    CHECK_FALSE(isomorphic(oracle::load("fig8.tri"), oracle::load("gieseking.tri")));
    Triangulation a = oracle::load("fig8-inflated.tri");
    Triangulation b = a;
    b.unglue(0, 0);
    CHECK_FALSE(isomorphic(a, b));
}

TEST_CASE("a broken map is rejected") {
    Triangulation t = oracle::load("fig8.tri");
    IsoMap m{{0, 1}, {Perm4(), Perm4(1, 0, 2, 3)}};
    CHECK_FALSE(verify_iso(t, t, m));
    IsoMap id{{0, 1}, {Perm4(), Perm4()}};
    CHECK(verify_iso(t, t, id));
}
