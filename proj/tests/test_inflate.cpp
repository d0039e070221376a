#include <doctest.h>

#include <algorithm>

#include "ideal/crush.hpp"
#include "ideal/inflate.hpp"
#include "ideal/isomorphism.hpp"
#include "support.hpp"

using namespace ideal;

namespace {

std::vector<std::pair<PieceKind, int>> shape(const Decomposition& d) {
    std::vector<std::pair<PieceKind, int>> v;
    for (const auto& p : d.pieces) v.push_back({p.kind, static_cast<int>(p.sides.size())});
    std::sort(v.begin(), v.end());
    return v;
}

int quads(const NormalCoords& c) {
    int n = 0;
    for (const auto& r : c.rows) n += r[4] + r[5] + r[6];
    return n;
}

}  // namespace

TEST_CASE("polygon decomposition") {
    using K = PieceKind;
    CHECK(decompose_polygon({}).pieces.empty());
    auto bigon = decompose_polygon({1, 1});
    CHECK(shape(bigon) == std::vector<std::pair<K, int>>{{K::Generic, 2}});
    CHECK(bigon.added == 0);
    auto cross = decompose_polygon({1, -1, 1, -1});
    CHECK(cross.crossings == 1);
    CHECK(cross.added == 1);
    // two links of lengths 2 and 4
    auto a = decompose_polygon({1, 1, -1, -1, -1, -1});
    CHECK(shape(a) == std::vector<std::pair<K, int>>{{K::Generic, 2}, {K::Branch, 4}});
    CHECK(a.added == 2);
    // two length-2 runs around a crossing
    auto b = decompose_polygon({1, 1, -1, -1, 1, -1});
    CHECK(shape(b) == std::vector<std::pair<K, int>>{{K::Crossing, 4}, {K::Branch, 3}, {K::Branch, 3}});
    CHECK(b.added == 3);
    CHECK_THROWS_AS(decompose_polygon({1}), Error);
    CHECK_THROWS_AS(decompose_polygon({1, 1, 1, -1}), Error);
}

TEST_CASE("alternating polygons cost 3m - 5") {
    for (int m = 2; m <= 6; ++m) {
        std::vector<int> marks;
        for (int i = 0; i < m; ++i) {
            marks.push_back(1);
            marks.push_back(-1);
        }
        auto d = decompose_polygon(marks);
        CHECK(d.added == 3 * m - 5);
        CHECK(d.crossings == m - 1);
    }
}

TEST_CASE("subdivision plans") {
    for (int k = 3; k <= 8; ++k) {
        auto plans = polygon_plans(k);
        CHECK(static_cast<long>(plans.size()) == oracle::catalan(k - 2));
        for (const auto& p : plans) CHECK(valid_plan(k, p));
        CHECK(valid_plan(k, fan_plan(k)));
        CHECK(valid_plan(k, fan_plan(k, 2)));
    }
    CHECK_FALSE(valid_plan(4, {{1, 2, 3}, {1, 2, 4}}));
    CHECK_FALSE(valid_plan(4, {{1, 2, 3}}));
}

TEST_CASE("figure-eight configuration polygons") {
    Triangulation t = oracle::load("fig8.tri");
    Links links = build_links(t);
    auto xi = read_frames(oracle::fixture("fig8-xi1.frame"), links);
    Complexity c = complexity(t, links, xi);
    auto polys = config_polygons(t, links, xi, c.orders);
    REQUIRE(polys.size() == 2);
    std::vector<std::vector<std::pair<PieceKind, int>>> shapes;
    int entries = 0;
    for (const auto& p : polys) {
        shapes.push_back(shape(decompose_polygon(p.marks())));
        entries += static_cast<int>(p.entries.size());
    }
    // every frame arc has two ends, each on some edge
    CHECK(entries == 2 * 5);
    using K = PieceKind;
    std::sort(shapes.begin(), shapes.end());
    CHECK(shapes[0] == std::vector<std::pair<K, int>>{{K::Generic, 2}, {K::Branch, 4}});
    CHECK(shapes[1] == std::vector<std::pair<K, int>>{{K::Crossing, 4}});
}

TEST_CASE("gieseking polygon") {
    Triangulation t = oracle::load("gieseking.tri");
    Links links = build_links(t);
    auto fr = read_frames(oracle::fixture("gieseking.frame"), links);
    auto polys = config_polygons(t, links, fr, complexity(t, links, fr).orders);
    REQUIRE(polys.size() == 1);
    using K = PieceKind;
    CHECK(shape(decompose_polygon(polys[0].marks())) ==
          std::vector<std::pair<K, int>>{{K::Crossing, 4}, {K::Branch, 3}, {K::Branch, 3}});
}

TEST_CASE("face chains") {
    Triangulation t = oracle::load("fig8.tri");
    Links links = build_links(t);
    auto xi = read_frames(oracle::fixture("fig8-xi1.frame"), links);
    auto chains = face_chains(t, links, xi, {});
    int arcs = 0;
    for (const auto& ch : chains) {
        arcs += static_cast<int>(ch.slots.size());
        for (const auto& s : ch.slots) {
            CHECK(s.corner != ch.face);
            CHECK(s.start != s.finish);
            CHECK(s.start != s.corner);
        }
    }
    CHECK(arcs == 5);
    FaceOrders bad;
    bad[chains[0].face_class] = {};
    CHECK_THROWS_AS(face_chains(t, links, xi, bad), Error);
}

TEST_CASE("figure-eight inflation along the homological longitude") {
    Triangulation t = oracle::load("fig8.tri");
    Links links = build_links(t);
    auto xi = read_frames(oracle::fixture("fig8-xi1.frame"), links);
    InflationResult r = inflate(t, links, xi);
    CHECK(r.C == 8);
    CHECK(r.tri.size() == 10);
    CHECK(validate(r.tri).empty());
    auto m = isomorphic(r.tri, oracle::load("fig8-inflated.tri"));
    REQUIRE(m.has_value());
    // arc tetrahedra land on the golden arc labels without corner changes
    Triangulation g = oracle::load("fig8-inflated.tri");
    for (int x = 0; x < r.tri.size(); ++x)
        if (r.provenance[x].kind == Origin::FrameArc) CHECK(m->corner[x].is_identity());
    // the bookkeeping surface is the torus with seven quads
    REQUIRE(r.boundary_coords.size() == 1);
    CHECK(quads(r.boundary_coords[0]) == 7);
    SurfaceReport s = surface_from_coords(r.tri, r.boundary_coords[0]);
    CHECK(s.connected());
    CHECK(s.euler() == 0);
    CHECK(s.components[0].orientable);
}

TEST_CASE("untouched gluings survive") {
    Triangulation t = oracle::load("fig8.tri");
    Links links = build_links(t);
    auto xi = read_frames(oracle::fixture("fig8-xi2.frame"), links);
    InflationResult r = inflate(t, links, xi);
    CHECK(r.tri.size() == 2 + 9);
    std::set<int> touched;
    for (const auto& ch : face_chains(t, links, xi, r.orders)) touched.insert(ch.face_class);
    Skeleton sk = skeleton(t);
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 0; f < 4; ++f) {
            if (touched.count(sk.face_of[tet][f])) continue;
            CHECK(r.tri.gluing(tet, f).tet == t.gluing(tet, f).tet);
            CHECK(r.tri.gluing(tet, f).perm == t.gluing(tet, f).perm);
        }
}

TEST_CASE("gieseking inflation") {
    Triangulation t = oracle::load("gieseking.tri");
    Links links = build_links(t);
    auto fr = read_frames(oracle::fixture("gieseking.frame"), links);
    InflationResult r = inflate(t, links, fr);
    CHECK(r.tri.size() == 7);
    SurfaceReport s = surface_from_coords(r.tri, r.boundary_coords[0]);
    CHECK(s.connected());
    CHECK(s.euler() == 0);
    CHECK_FALSE(s.components[0].orientable);
    auto b = boundary_complex(r.tri);
    REQUIRE(b.size() == 1);
    CHECK_FALSE(b[0].orientable);
    CHECK(b[0].vertices == 1);
}

TEST_CASE("alternative branch subdivisions keep the round trip") {
    Triangulation t = oracle::load("fig8.tri");
    Links links = build_links(t);
    auto xi = read_frames(oracle::fixture("fig8-xi1.frame"), links);
    InflationResult base = inflate(t, links, xi);
    int edge = -1;
    for (std::size_t i = 0; i < base.decompositions.size(); ++i)
        for (const auto& p : base.decompositions[i].pieces)
            if (p.kind == PieceKind::Branch) edge = base.polygons[i].edge;
    REQUIRE(edge >= 0);
    InflateOptions opt;
    opt.plans[{edge, 0}] = fan_plan(4, 2);
    InflationResult alt = inflate(t, links, xi, opt);
    CHECK(alt.tri.size() == 10);
    CHECK(isomorphic(crush_along_boundary(alt.tri), t).has_value());
    opt.plans[{edge, 0}] = {{1, 2, 3}, {1, 2, 4}};
    CHECK_THROWS_AS(inflate(t, links, xi, opt), Error);
}

TEST_CASE("inflation input checks") {
    Triangulation t = oracle::load("fig8.tri");
    Links links = build_links(t);
    CHECK_THROWS_AS(inflate(t, links, {}), Error);
    Triangulation l = oracle::load("l41-four.tri");
    CHECK_THROWS_AS(inflate(l, {}), Error);  // sphere links
    Triangulation b = oracle::load("fig8-inflated.tri");
    CHECK_THROWS_AS(inflate(b, {}), Error);  // boundary
}

TEST_CASE("whitehead inflation has the homology of the link complement") {
    Triangulation t = oracle::load("whitehead-x.tri");
    Links links = build_links(t);
    InflationResult r = inflate(t, links, read_frames(oracle::fixture("whitehead-x.frame"), links));
    CHECK(r.tri.size() == 18);
    auto h = oracle::h1(r.tri);
    CHECK(h.rank == 2);
    CHECK(h.torsion.empty());
    CHECK(r.boundary_coords.size() == 2);
}
