#include "ideal/skeleton.hpp"

#include <algorithm>
#include <map>

#include "ideal/union_find.hpp"

namespace ideal {

Skeleton skeleton(const Triangulation& tri) {
    const int n = tri.size();
    Skeleton sk;
    UnionFind vuf(4 * n);
    ParityUnionFind euf(6 * n);
    std::vector<char> bad_edge(6 * n, 0);

    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            for (int v : kFaceVertex[f]) vuf.unite(4 * t + v, 4 * g.tet + g.perm[v]);
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    int a = kFaceVertex[f][i], b = kFaceVertex[f][j];
                    int pa = g.perm[a], pb = g.perm[b];
                    int e = kEdgeIndex[a][b], e2 = kEdgeIndex[pa][pb];
                    if (!euf.unite(6 * t + e, 6 * g.tet + e2, pa > pb ? 1 : 0)) bad_edge[6 * t + e] = 1;
                }
            }
        }
    }

    sk.vertex_of.assign(n, {});
    sk.edge_of.assign(n, {});
    sk.edge_rev.assign(n, {});
    sk.face_of.assign(n, {});

    std::map<int, int> vid;
    for (int i = 0; i < 4 * n; ++i) {
        int r = vuf.find(i);
        auto [it, inserted] = vid.emplace(r, static_cast<int>(sk.vertices.size()));
        if (inserted) sk.vertices.emplace_back();
        sk.vertices[it->second].members.emplace_back(i / 4, i % 4);
        sk.vertex_of[i / 4][i % 4] = it->second;
    }

    std::map<int, int> eid;
    for (int i = 0; i < 6 * n; ++i) {
        auto [r, par] = euf.find(i);
        auto [it, inserted] = eid.emplace(r, static_cast<int>(sk.edges.size()));
        if (inserted) sk.edges.emplace_back();
        EdgeClass& ec = sk.edges[it->second];
        ec.members.push_back({i / 6, i % 6, par != 0});
        sk.edge_of[i / 6][i % 6] = it->second;
        sk.edge_rev[i / 6][i % 6] = par != 0;
    }
    for (int i = 0; i < 6 * n; ++i)
        if (bad_edge[i]) sk.edges[sk.edge_of[i / 6][i % 6]].self_reversed = true;

    for (int t = 0; t < n; ++t) sk.face_of[t].fill(-1);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (sk.face_of[t][f] >= 0) continue;
            FaceClass fc{t, f};
            const Gluing& g = tri.gluing(t, f);
            int id = static_cast<int>(sk.faces.size());
            sk.face_of[t][f] = id;
            if (g.glued()) {
                fc.other_tet = g.tet;
                fc.other_face = g.perm[f];
                sk.face_of[g.tet][g.perm[f]] = id;
            } else {
                for (int v : kFaceVertex[f]) sk.vertices[sk.vertex_of[t][v]].boundary = true;
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j)
                        sk.edges[sk.edge_of[t][kEdgeIndex[kFaceVertex[f][i]][kFaceVertex[f][j]]]].boundary =
                            true;
            }
            sk.faces.push_back(fc);
        }
    }
    return sk;
}

int euler_characteristic(const Triangulation& tri, const Skeleton& sk) {
    return static_cast<int>(sk.vertices.size()) - static_cast<int>(sk.edges.size()) +
           static_cast<int>(sk.faces.size()) - tri.size();
}

int euler_characteristic(const Triangulation& tri) { return euler_characteristic(tri, skeleton(tri)); }

std::vector<std::vector<int>> components(const Triangulation& tri) {
    UnionFind uf(tri.size());
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.gluing(t, f).glued()) uf.unite(t, tri.gluing(t, f).tet);
    std::map<int, std::vector<int>> groups;
    for (int t = 0; t < tri.size(); ++t) groups[uf.find(t)].push_back(t);
    std::vector<std::vector<int>> out;
    for (auto& [r, v] : groups) out.push_back(std::move(v));
    return out;
}

Orientability orientability(const Triangulation& tri) {
    const int n = tri.size();
    ParityUnionFind uf(n);
    std::vector<char> bad(n, 0);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            if (!uf.unite(t, g.tet, g.perm.sign() == 1 ? 1 : 0)) bad[t] = 1;
        }
    }
    Orientability o;
    o.sign.assign(n, 1);
    for (int t = 0; t < n; ++t) o.sign[t] = uf.find(t).second ? -1 : 1;
    for (const auto& comp : components(tri)) {
        bool ok = std::none_of(comp.begin(), comp.end(), [&](int t) { return bad[t] != 0; });
        o.component_orientable.push_back(ok);
        if (!ok) o.orientable = false;
    }
    return o;
}

std::vector<BoundarySurface> boundary_complex(const Triangulation& tri, const Skeleton& sk) {
    std::vector<std::pair<int, int>> faces;
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.boundary(t, f)) faces.emplace_back(t, f);
    const int m = static_cast<int>(faces.size());

    // occurrences of each edge class among boundary triangle sides: (face idx, direction)
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int i = 0; i < m; ++i) {
        auto [t, f] = faces[i];
        const int* v = kFaceVertex[f];
        // boundary cycle v0 -> v1 -> v2 -> v0
        const int sides[3][2] = {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[0]}};
        for (const auto& s : sides) {
            int a = s[0], b = s[1];
            int e = kEdgeIndex[a][b];
            int dir = (a < b) ? 1 : -1;
            if (sk.edge_rev[t][e]) dir = -dir;
            occ[sk.edge_of[t][e]].emplace_back(i, dir);
        }
    }

    UnionFind conn(m);
    ParityUnionFind orient(m);
    std::vector<char> nonorient(m, 0);
    for (auto& [e, list] : occ) {
        for (std::size_t k = 1; k < list.size(); ++k) {
            conn.unite(list[0].first, list[k].first);
            if (sk.edges[e].self_reversed) continue;
            int rel = list[0].second == list[k].second ? 1 : 0;
            if (!orient.unite(list[0].first, list[k].first, rel)) nonorient[list[0].first] = 1;
        }
    }

    std::map<int, int> comp_id;
    std::vector<BoundarySurface> out;
    for (int i = 0; i < m; ++i) {
        int r = conn.find(i);
        auto [it, inserted] = comp_id.emplace(r, static_cast<int>(out.size()));
        if (inserted) out.emplace_back();
        out[it->second].faces.push_back(faces[i]);
        if (nonorient[i]) out[it->second].orientable = false;
    }
    for (auto& [e, list] : occ) {
        if (sk.edges[e].self_reversed) out[comp_id[conn.find(list[0].first)]].orientable = false;
    }
    for (auto& bs : out) {
        std::vector<int> vs, es;
        for (auto [t, f] : bs.faces) {
            for (int v : kFaceVertex[f]) vs.push_back(sk.vertex_of[t][v]);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    es.push_back(sk.edge_of[t][kEdgeIndex[kFaceVertex[f][i]][kFaceVertex[f][j]]]);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        bs.vertices = static_cast<int>(vs.size());
        bs.edges = static_cast<int>(es.size());
        bs.vertex_classes = std::move(vs);
        bs.edge_classes = std::move(es);
    }
    return out;
}

std::vector<BoundarySurface> boundary_complex(const Triangulation& tri) {
    return boundary_complex(tri, skeleton(tri));
}

}  // namespace ideal
