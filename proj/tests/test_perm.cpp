#include <doctest.h>

#include <set>

#include "ideal/perm.hpp"

using ideal::Perm4;

TEST_CASE("perm basics") {
    Perm4 p(1, 2, 3, 0);
    CHECK(p[0] == 1);
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.sign() == -1);
    CHECK(Perm4::swap(0, 3).sign() == -1);
    CHECK(Perm4().sign() == 1);
    CHECK(p.str() == "1230");
}

TEST_CASE("composition applies the right factor first") {
    Perm4 a(1, 0, 2, 3), b(0, 2, 1, 3);
    Perm4 ab = a * b;
    for (int i = 0; i < 4; ++i) CHECK(ab[i] == a[b[i]]);
}

TEST_CASE("index enumerates all 24 permutations in order") {
    std::set<Perm4> seen;
    for (int i = 0; i < 24; ++i) {
        Perm4 p = Perm4::from_index(i);
        CHECK(p.index() == i);
        if (i) CHECK(Perm4::from_index(i - 1) < p);
        seen.insert(p);
    }
    CHECK(seen.size() == 24);
}

TEST_CASE("face permutations from bracket notation") {
    Perm4 p = ideal::face_perm("013", "312");
    CHECK(p[0] == 3);
    CHECK(p[1] == 1);
    CHECK(p[3] == 2);
    CHECK(p[2] == 0);
    CHECK(ideal::missing_corner("013") == 2);
    CHECK_THROWS_AS(ideal::face_perm("011", "012"), std::invalid_argument);
}
