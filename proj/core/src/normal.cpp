#include "ideal/normal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ideal/skeleton.hpp"
#include "ideal/union_find.hpp"

namespace ideal {

int quad_type(int a, int b) {
    if (a == 0) return b - 1;
    if (b == 0) return a - 1;
    return 5 - a - b;
}

int NormalCoords::quad_kind(int t) const {
    for (int q = 0; q < 3; ++q)
        if (quad(t, q) != 0) return q;
    return -1;
}

NormalCoords NormalCoords::operator+(const NormalCoords& o) const {
    if (o.size() != size()) throw Error("coordinate size mismatch");
    NormalCoords r(size());
    for (int t = 0; t < size(); ++t)
        for (int i = 0; i < 7; ++i) r.rows[t][i] = rows[t][i] + o.rows[t][i];
    return r;
}

MatchingReport check_matching(const Triangulation& tri, const NormalCoords& c) {
    if (c.size() != tri.size())
        throw Error("coordinates have " + std::to_string(c.size()) + " rows for " +
                    std::to_string(tri.size()) + " tetrahedra");
    MatchingReport rep;
    auto bad = [&](std::string s) {
        rep.admissible = false;
        rep.violations.push_back(std::move(s));
    };
    for (int t = 0; t < tri.size(); ++t) {
        int kinds = 0;
        for (int i = 0; i < 7; ++i)
            if (c.rows[t][i] < 0) bad("negative coordinate in " + tri.label(t));
        for (int q = 0; q < 3; ++q)
            if (c.quad(t, q) != 0) ++kinds;
        if (kinds > 1) bad("two quad types in " + tri.label(t));
    }
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            int h = g.perm[f];
            if (std::make_pair(g.tet, h) < std::make_pair(t, f)) continue;
            for (int x : kFaceVertex[f]) {
                int here = c.arcs(t, f, x), there = c.arcs(g.tet, h, g.perm[x]);
                if (here != there)
                    bad("matching fails on " + tri.label(t) + "(" + face_name(f) + ") corner " +
                        std::to_string(x) + ": " + std::to_string(here) + " vs " + std::to_string(there));
            }
        }
    }
    return rep;
}

NormalCoords vertex_link_coords(const Triangulation& tri) {
    NormalCoords c(tri.size());
    for (int t = 0; t < tri.size(); ++t)
        for (int a = 0; a < 4; ++a) c.tri(t, a) = 1;
    return c;
}

NormalCoords vertex_link_coords(const Triangulation& tri, int vertex_class) {
    Skeleton sk = skeleton(tri);
    NormalCoords c(tri.size());
    for (auto [t, a] : sk.vertices.at(vertex_class).members) c.tri(t, a) = 1;
    return c;
}

int SurfaceReport::euler() const {
    int e = 0;
    for (const auto& c : components) e += c.euler;
    return e;
}

NormalCoords SurfaceReport::coords(int tets) const {
    NormalCoords c(tets);
    for (const auto& d : disks) {
        if (d.kind == DiskKind::Triangle)
            ++c.tri(d.tet, d.type);
        else
            ++c.quad(d.tet, d.type);
    }
    return c;
}

namespace {

struct DiskEdge {
    int a, b;  // the disk meets tet edge ab
};

std::vector<DiskEdge> disk_cycle(const NormalDisk& d) {
    if (d.kind == DiskKind::Triangle) {
        std::vector<DiskEdge> cyc;
        for (int v = 0; v < 4; ++v)
            if (v != d.type) cyc.push_back({d.type, v});
        return cyc;
    }
    int p0 = kQuadPair[d.type][0][0], p1 = kQuadPair[d.type][0][1];
    int r0 = kQuadPair[d.type][1][0], r1 = kQuadPair[d.type][1][1];
    return {{p0, r0}, {p0, r1}, {p1, r1}, {p1, r0}};
}

int common(const DiskEdge& x, const DiskEdge& y, int& ox, int& oy) {
    int c = -1;
    if (x.a == y.a || x.a == y.b) c = x.a;
    else c = x.b;
    ox = x.a == c ? x.b : x.a;
    oy = y.a == c ? y.b : y.a;
    return c;
}

}  // namespace

SurfaceReport surface_from_coords(const Triangulation& tri, const NormalCoords& c) {
    MatchingReport mr = check_matching(tri, c);
    if (!mr.admissible) throw Error("coordinates fail matching: " + mr.violations.front());
    Skeleton sk = skeleton(tri);
    const int n = tri.size();
    SurfaceReport rep;

    for (int t = 0; t < n; ++t) {
        for (int a = 0; a < 4; ++a)
            for (int i = 0; i < c.tri(t, a); ++i) rep.disks.push_back({t, DiskKind::Triangle, a, i});
        for (int q = 0; q < 3; ++q)
            for (int j = 0; j < c.quad(t, q); ++j) rep.disks.push_back({t, DiskKind::Quad, q, j});
    }
    const int D = static_cast<int>(rep.disks.size());

    auto points_on = [&](int t, int a, int b) {
        int n_ab = c.tri(t, a) + c.tri(t, b);
        int q = c.quad_kind(t);
        if (q >= 0 && q != quad_type(a, b)) n_ab += c.quad(t, q);
        return n_ab;
    };
    // index k counted from corner x on edge xy -> global point key
    auto point_key = [&](int t, int x, int y, int k) {
        int e = kEdgeIndex[x][y];
        int n_e = points_on(t, x, y);
        int lo = x < y ? k : n_e - 1 - k;
        int cls = sk.edge_of[t][e];
        int idx = sk.edge_rev[t][e] ? n_e - 1 - lo : lo;
        return std::make_pair(cls, idx);
    };
    auto index_from = [&](const NormalDisk& d, int x) {
        if (d.kind == DiskKind::Triangle) return d.layer;
        bool first = kQuadPair[d.type][0][0] == x || kQuadPair[d.type][0][1] == x;
        return c.tri(d.tet, x) + (first ? d.layer : c.quad(d.tet, d.type) - 1 - d.layer);
    };

    // arc key: canonical face side (tet, face), canonical corner, index from corner
    std::map<std::array<int, 4>, std::vector<std::pair<int, int>>> arc_sides;  // -> (disk, dir)
    std::vector<std::vector<std::pair<int, int>>> disk_points(D);
    for (int d = 0; d < D; ++d) {
        const NormalDisk& nd = rep.disks[d];
        auto cyc = disk_cycle(nd);
        int k = static_cast<int>(cyc.size());
        for (int i = 0; i < k; ++i) {
            const DiskEdge& e1 = cyc[i];
            const DiskEdge& e2 = cyc[(i + 1) % k];
            disk_points[d].push_back(point_key(nd.tet, e1.a, e1.b, index_from(nd, e1.a)));
            int y, z;
            int x = common(e1, e2, y, z);
            int f = 6 - x - y - z;
            int dir = y < z ? 1 : -1;
            int idx = index_from(nd, x);
            int t = nd.tet;
            const Gluing& g = tri.gluing(t, f);
            std::array<int, 4> key{t, f, x, idx};
            if (g.glued()) {
                int h = g.perm[f];
                if (std::make_pair(g.tet, h) < std::make_pair(t, f)) {
                    key = {g.tet, h, g.perm[x], idx};
                    if ((g.perm[y] < g.perm[z]) != (y < z)) dir = -dir;
                }
            }
            arc_sides[key].emplace_back(d, dir);
        }
    }

    UnionFind conn(std::max(D, 1));
    ParityUnionFind orient(std::max(D, 1));
    std::vector<char> nonorient(std::max(D, 1), 0);
    for (auto& [key, sides] : arc_sides) {
        if (sides.size() < 2) continue;
        conn.unite(sides[0].first, sides[1].first);
        int rel = sides[0].second == sides[1].second ? 1 : 0;
        if (!orient.unite(sides[0].first, sides[1].first, rel)) nonorient[sides[0].first] = 1;
    }

    std::map<int, int> cid;
    for (int d = 0; d < D; ++d) {
        int r = conn.find(d);
        auto [it, inserted] = cid.emplace(r, static_cast<int>(rep.components.size()));
        if (inserted) {
            rep.components.emplace_back();
            rep.components.back().coords = NormalCoords(n);
        }
        rep.disks[d].component = it->second;
        SurfaceComponent& sc = rep.components[it->second];
        ++sc.disks;
        if (nonorient[d]) sc.orientable = false;
        const NormalDisk& nd = rep.disks[d];
        if (nd.kind == DiskKind::Triangle)
            ++sc.coords.tri(nd.tet, nd.type);
        else
            ++sc.coords.quad(nd.tet, nd.type);
    }
    std::vector<std::set<std::pair<int, int>>> pts(rep.components.size());
    for (int d = 0; d < D; ++d)
        for (auto& p : disk_points[d]) pts[rep.disks[d].component].insert(p);
    for (auto& [key, sides] : arc_sides) {
        SurfaceComponent& sc = rep.components[rep.disks[sides[0].first].component];
        ++sc.edges;
        if (sides.size() == 1) ++sc.boundary_edges;
    }
    for (std::size_t i = 0; i < rep.components.size(); ++i) {
        SurfaceComponent& sc = rep.components[i];
        sc.vertices = static_cast<int>(pts[i].size());
        sc.euler = sc.vertices - sc.edges + sc.disks;
    }
    return rep;
}

std::vector<SmallSurface> enumerate_small_surfaces(const Triangulation& tri, int max_coord) {
    const int n = tri.size();
    std::vector<SmallSurface> out;
    if (max_coord < 0) return out;
    Skeleton sk = skeleton(tri);

    struct Link {
        int to;   // corner id t*4+x
        int qa_t, qa_type, qb_t, qb_type;  // T[to] = T[from] + Q[qa] - Q[qb]
    };
    std::vector<std::vector<Link>> adj(4 * n);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            int h = g.perm[f];
            for (int x : kFaceVertex[f]) {
                int y = g.perm[x];
                adj[4 * t + x].push_back({4 * g.tet + y, t, quad_type(x, f), g.tet, quad_type(y, h)});
            }
        }
    }

    const int choices = 1 + 3 * max_coord;
    std::vector<int> pick(n, 0);
    auto quad_of = [&](int t, int q) {
        int p = pick[t];
        if (p == 0) return 0;
        --p;
        return (p / max_coord) == q ? p % max_coord + 1 : 0;
    };
    const int V = static_cast<int>(sk.vertices.size());
    std::vector<int> offset(4 * n);
    while (true) {
        bool ok = true;
        std::vector<int> lo(V), hi(V);
        for (int v = 0; v < V && ok; ++v) {
            auto [t0, a0] = sk.vertices[v].members.front();
            int root = 4 * t0 + a0;
            std::vector<char> seen(4 * n, 0);
            std::queue<int> q;
            offset[root] = 0;
            seen[root] = 1;
            q.push(root);
            int mn = 0, mx = 0;
            while (!q.empty() && ok) {
                int cur = q.front();
                q.pop();
                for (const Link& l : adj[cur]) {
                    int want = offset[cur] + quad_of(l.qa_t, l.qa_type) - quad_of(l.qb_t, l.qb_type);
                    if (seen[l.to]) {
                        if (offset[l.to] != want) ok = false;
                        continue;
                    }
                    seen[l.to] = 1;
                    offset[l.to] = want;
                    mn = std::min(mn, want);
                    mx = std::max(mx, want);
                    q.push(l.to);
                }
            }
            lo[v] = -mn;
            hi[v] = max_coord - mx;
            if (lo[v] > hi[v]) ok = false;
        }
        if (ok) {
            std::vector<int> val(lo);
            while (true) {
                NormalCoords c(n);
                for (int t = 0; t < n; ++t) {
                    for (int a = 0; a < 4; ++a) c.tri(t, a) = val[sk.vertex_of[t][a]] + offset[4 * t + a];
                    for (int q = 0; q < 3; ++q) c.quad(t, q) = quad_of(t, q);
                }
                bool zero = true;
                for (const auto& r : c.rows)
                    for (int x : r) zero = zero && x == 0;
                if (!zero) out.push_back({c, SurfaceReport{}});
                int k = 0;
                while (k < V && val[k] == hi[k]) {
                    val[k] = lo[k];
                    ++k;
                }
                if (k == V) break;
                ++val[k];
            }
        }
        int k = 0;
        while (k < n && pick[k] == choices - 1) {
            pick[k] = 0;
            ++k;
        }
        if (k == n) break;
        ++pick[k];
    }
    std::sort(out.begin(), out.end(), [](const SmallSurface& a, const SmallSurface& b) { return a.coords < b.coords; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const SmallSurface& a, const SmallSurface& b) { return a.coords == b.coords; }),
              out.end());
    for (auto& s : out) s.report = surface_from_coords(tri, s.coords);
    return out;
}

}  // namespace ideal
