#include <doctest.h>

#include "ideal/crush.hpp"
#include "ideal/inflate.hpp"
#include "ideal/isomorphism.hpp"
#include "support.hpp"

using namespace ideal;

namespace {

std::string data(const std::string& name) { return oracle::fixture("../tests/data/" + name); }

// Coordinates carried through the same relabeling as oracle::shuffle.
NormalCoords shuffle_coords(const NormalCoords& c, unsigned seed, int tets) {
    std::mt19937 rng(seed);
    std::vector<int> order(tets);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Perm4> corner;
    for (int t = 0; t < tets; ++t) corner.push_back(Perm4::from_index(static_cast<int>(rng() % 24)));
    NormalCoords out(tets);
    for (int t = 0; t < tets; ++t) {
        auto& row = out.rows[order[t]];
        for (int x = 0; x < 4; ++x) row[corner[t][x]] = c.rows[t][x];
        for (int q = 0; q < 3; ++q) {
            int a = corner[t][0], b = corner[t][q + 1];
            int img = a == 0 ? b - 1 : b == 0 ? a - 1 : 5 - a - b;
            row[4 + img] = c.rows[t][4 + q];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("lens space sphere crushes to one tetrahedron") {
    Triangulation t = oracle::load("l41-four.tri");
    NormalCoords s = read_coords(data("l41-sphere.coords"));
    REQUIRE(oracle::matches(t, s));
    CellDecomposition cd = cell_decomposition(t, s);
    CHECK(obstructions(cd).clear());
    CHECK(cd.count(PieceType::TruncatedTet) == 1);
    CHECK(cd.count(PieceType::Prism) == 3);
    CHECK(cd.chain_lengths() == std::vector<int>{1, 2});
    Triangulation out = crush(t, cd);
    CHECK(out.size() == 1);
    CHECK(out.closed());
    CHECK(validate(out).empty());
    CHECK(isomorphic(out, oracle::load("l41-one.tri")).has_value());
    auto h = oracle::h1(out);
    CHECK(h.rank == 0);
    CHECK(h.torsion == std::vector<long>{4});
}

TEST_CASE("crushing is invariant under relabeling") {
    Triangulation t = oracle::load("l41-four.tri");
    NormalCoords s = read_coords(data("l41-sphere.coords"));
    Triangulation ref = crush(t, s);
    for (unsigned seed = 1; seed <= 8; ++seed) {
        Triangulation u = oracle::shuffle(t, seed);
        NormalCoords su = shuffle_coords(s, seed, t.size());
        REQUIRE(oracle::matches(u, su));
        CHECK(isomorphic(crush(u, su), ref).has_value());
    }
}

TEST_CASE("decomposition of the inflated figure-eight") {
    Triangulation t = oracle::load("fig8-inflated.tri");
    NormalCoords s = boundary_linking_coords(t);
    CHECK(oracle::matches(t, s));
    CellDecomposition cd = cell_decomposition(t, s);
    CHECK(obstructions(cd).clear());
    CHECK(cd.count(PieceType::TruncatedTet) == 2);
    int arcs = 0;
    for (const auto& p : cd.pieces)
        if (p.in_x && p.type == PieceType::Prism) ++arcs;
    CHECK(arcs == cd.count(PieceType::Prism));
    for (const auto& pc : cd.products) CHECK(pc.trivial());
    CHECK(isomorphic(crush(t, cd), oracle::load("fig8.tri")).has_value());
}

TEST_CASE("crushing along the boundary undoes inflation") {
    CHECK(isomorphic(crush_along_boundary(oracle::load("fig8-inflated.tri")), oracle::load("fig8.tri")).has_value());
    CHECK(isomorphic(crush_along_boundary(oracle::load("gieseking-inflated.tri")), oracle::load("gieseking.tri")).has_value());
    CHECK_THROWS_AS(crush_along_boundary(oracle::load("fig8.tri")), Error);
}

TEST_CASE("boundary linking surface of an inflation") {
    Triangulation t = oracle::load("fig8-inflated.tri");
    auto comps = boundary_linking_components(t);
    REQUIRE(comps.size() == 1);
    SurfaceReport r = surface_from_coords(t, comps[0]);
    CHECK(r.connected());
    CHECK(r.euler() == 0);
    InflationResult inf = inflate(oracle::load("fig8.tri"),
                                  read_frames(oracle::fixture("fig8-xi1.frame"), build_links(oracle::load("fig8.tri"))));
    CHECK(boundary_linking_components(inf.tri) == inf.boundary_coords);
}

TEST_CASE("boundary that is not normal") {
    // one tetrahedron with a single self-gluing leaves two boundary faces sharing all corners
    Triangulation t("layered");
    t.add_tet("a");
    t.glue(0, "012", 0, "123");
    CHECK_THROWS_AS(boundary_linking_components(t), Error);
}

TEST_CASE("crushing the vertex links gives the input back") {
    for (const char* n : {"l41-four.tri", "fig8.tri"}) {
        Triangulation t = oracle::load(n);
        NormalCoords s = vertex_link_coords(t);
        CellDecomposition cd = cell_decomposition(t, s);
        CHECK(cd.count(PieceType::TruncatedTet) == t.size());
        CHECK(cd.count(PieceType::Prism) == 0);
        CHECK(isomorphic(crush(t, cd), t).has_value());
    }
}

TEST_CASE("obstructed spheres") {
    Triangulation rp3 = read_tri(data("rp3.tri"));
    NormalCoords s = read_coords(data("rp3-sphere.coords"));
    REQUIRE(oracle::matches(rp3, s));
    auto h = oracle::h1(rp3);
    CHECK(h.rank == 0);
    CHECK(h.torsion == std::vector<long>{2});
    CellDecomposition cd = cell_decomposition(rp3, s);
    ObstructionReport ob = obstructions(cd);
    CHECK(ob.no_truncated_tetrahedra);
    CHECK(ob.nontrivial_product_region);
    CHECK(ob.prism_cycles.empty());
    CHECK_THROWS_AS(crush(rp3, cd), ObstructionError);

    Triangulation l31 = read_tri(data("l31.tri"));
    NormalCoords c = read_coords(data("l31-sphere.coords"));
    REQUIRE(oracle::matches(l31, c));
    h = oracle::h1(l31);
    CHECK(h.torsion == std::vector<long>{3});
    cd = cell_decomposition(l31, c);
    ob = obstructions(cd);
    CHECK(ob.prism_cycles.size() == 1);
    CHECK(ob.text().find("prism_cycles(1)") != std::string::npos);
    try {
        crush(l31, cd);
        FAIL("expected an obstruction");
    } catch (const ObstructionError& e) {
        CHECK(e.report.prism_cycles.size() == 1);
    }
}
