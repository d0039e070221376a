#include <doctest.h>

#include "ideal/triangulation.hpp"
#include "support.hpp"

using namespace ideal;

TEST_CASE("gluing stores both directions") {
    Triangulation t("x");
    int a = t.add_tet("a"), b = t.add_tet("b");
    t.glue(a, "013", b, "312");
    const Gluing& g = t.gluing(a, 2);
    CHECK(g.tet == b);
    CHECK(g.perm[2] == 0);
    const Gluing& h = t.gluing(b, 0);
    CHECK(h.tet == a);
    CHECK(h.perm[0] == 2);
    CHECK((h.perm * g.perm).is_identity());
    CHECK(t.boundary_face_count() == 6);
    CHECK_THROWS_AS(t.glue(a, 2, b, Perm4()), Error);
}

TEST_CASE("self gluing must be a non-trivial involution") {
    Triangulation t("x");
    int a = t.add_tet("a");
    CHECK_THROWS_AS(t.glue(a, 0, a, Perm4()), Error);
    t.glue(a, "012", a, "302");
    CHECK(t.gluing(a, 3).tet == a);
    CHECK(t.gluing(a, 1).perm == t.gluing(a, 3).perm.inverse());
    CHECK(validate(t).empty());
}

TEST_CASE("validate reports broken reverse entries") {
    Triangulation t = oracle::load("fig8.tri");
    CHECK(validate(t).empty());
    t.set_gluing_raw(0, 1, Gluing{1, Perm4()});
    CHECK_FALSE(validate(t).empty());
    Triangulation d("dup");
    d.add_tet("a");
    d.add_tet("a");
    CHECK_FALSE(validate(d).empty());
}

TEST_CASE("relabel keeps the structure") {
    Triangulation t = oracle::load("whitehead-y.tri");
    Triangulation r = oracle::shuffle(t, 7);
    CHECK(validate(r).empty());
    CHECK(r.size() == t.size());
    CHECK(r.boundary_face_count() == 0);
    std::vector<int> id{0, 1, 2, 3};
    std::vector<Perm4> same(4);
    CHECK(relabel(t, id, same) == t);
}
