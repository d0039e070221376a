#include "ideal/links.hpp"

#include <algorithm>
#include <map>

#include "ideal/union_find.hpp"

namespace ideal {

namespace {

// Corners of face f other than a, ascending.
std::pair<int, int> others(int f, int a) {
    int r[2], k = 0;
    for (int v : kFaceVertex[f])
        if (v != a) r[k++] = v;
    return {r[0], r[1]};
}

// +1 when the member-local direction agrees with the base cycle of its
// link triangle (the three other corners in ascending cyclic order).
int cycle_dir(int face, int corner) {
    int s[3], k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != corner) s[k++] = v;
    return face == s[1] ? -1 : 1;
}

int end_index(int t, int a, int b) { return t * 16 + a * 4 + b; }

}  // namespace

std::string arc_name(int tet, int face, int corner) {
    return "t" + std::to_string(tet) + ":" + face_name(face) + ":" + std::to_string(corner);
}

int Links::member_index(int tet, int face, int corner) const {
    // members are laid out 12 per tet in name order
    static constexpr int face_rank[4] = {3, 2, 1, 0};
    int pos = 0;
    for (int v : kFaceVertex[face]) {
        if (v == corner) break;
        ++pos;
    }
    return tet * 12 + face_rank[face] * 3 + pos;
}

int Links::find_arc(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
        if (arcs[i].name == name) return i;
    return -1;
}

int Links::member_end(int member, int other) const {
    const ArcMember& m = members[member];
    auto [b, c] = others(m.face, m.corner);
    int local = other == b ? 0 : 1;
    (void)c;
    int cls = member_class[member];
    const ArcClass& ac = arcs[cls];
    for (std::size_t i = 0; i < ac.members.size(); ++i)
        if (ac.members[i] == m) return ac.reversed[i] ? 1 - local : local;
    return local;
}

Links build_links(const Triangulation& tri) {
    const int n = tri.size();
    Links L;
    L.sk = skeleton(tri);
    static constexpr int faces_by_name[4] = {3, 2, 1, 0};
    for (int t = 0; t < n; ++t)
        for (int f : faces_by_name)
            for (int a : kFaceVertex[f]) L.members.push_back({t, f, a});

    const int m = static_cast<int>(L.members.size());
    L.member_partner.assign(m, -1);
    L.member_class.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        const ArcMember& am = L.members[i];
        const Gluing& g = tri.gluing(am.tet, am.face);
        if (!g.glued()) continue;
        L.member_partner[i] = L.member_index(g.tet, g.perm[am.face], g.perm[am.corner]);
    }

    // link vertex classes
    UnionFind luf(16 * n);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            for (int a : kFaceVertex[f])
                for (int b : kFaceVertex[f])
                    if (a != b) luf.unite(end_index(t, a, b), end_index(g.tet, g.perm[a], g.perm[b]));
        }
    }
    std::map<int, int> lid;
    std::vector<int> end_class(16 * n, -1);
    for (int t = 0; t < n; ++t) {
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                if (a == b) continue;
                int r = luf.find(end_index(t, a, b));
                auto [it, inserted] = lid.emplace(r, static_cast<int>(L.lverts.size()));
                if (inserted) {
                    L.lverts.emplace_back();
                    L.lverts.back().vertex = L.sk.vertex_of[t][a];
                    L.lverts.back().edge = L.sk.edge_of[t][kEdgeIndex[a][b]];
                }
                L.lverts[it->second].ends.push_back({t, a, b});
                end_class[end_index(t, a, b)] = it->second;
            }
        }
    }

    // arc classes
    for (int i = 0; i < m; ++i) {
        if (L.member_class[i] >= 0) continue;
        int id = static_cast<int>(L.arcs.size());
        ArcClass ac;
        const ArcMember& rep = L.members[i];
        ac.members.push_back(rep);
        ac.reversed.push_back(false);
        L.member_class[i] = id;
        int j = L.member_partner[i];
        if (j >= 0 && j != i) {
            const Gluing& g = tri.gluing(rep.tet, rep.face);
            auto [b, c] = others(rep.face, rep.corner);
            ac.members.push_back(L.members[j]);
            ac.reversed.push_back(g.perm[b] > g.perm[c]);
            L.member_class[j] = id;
        }
        auto [b, c] = others(rep.face, rep.corner);
        ac.start = end_class[end_index(rep.tet, rep.corner, b)];
        ac.end = end_class[end_index(rep.tet, rep.corner, c)];
        ac.vertex = L.sk.vertex_of[rep.tet][rep.corner];
        ac.name = arc_name(rep.tet, rep.face, rep.corner);
        L.arcs.push_back(std::move(ac));
    }

    // link triangle orientations
    ParityUnionFind ouf(4 * n);
    for (const ArcClass& ac : L.arcs) {
        if (ac.members.size() != 2) continue;
        const ArcMember& x = ac.members[0];
        const ArcMember& y = ac.members[1];
        int dx = cycle_dir(x.face, x.corner);
        int dy = cycle_dir(y.face, y.corner) * (ac.reversed[1] ? -1 : 1);
        ouf.unite(4 * x.tet + x.corner, 4 * y.tet + y.corner, dx == dy ? 1 : 0);
    }
    L.triangle_sign.assign(4 * n, 1);
    for (int i = 0; i < 4 * n; ++i) L.triangle_sign[i] = ouf.find(i).second ? -1 : 1;

    // fans
    auto other_face = [&](int a, int b, int f) {
        // the two faces containing corners a and b are opposite the other two corners
        for (int g = 0; g < 4; ++g)
            if (g != a && g != b && g != f) return g;
        return -1;
    };
    for (auto& lv : L.lverts) {
        auto [t0, a0, b0] = lv.ends.front();
        // positive rotation through triangle (t0,a0) at the corner on edge a0b0
        int s[3], k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != a0) s[k++] = v;
        int pos = static_cast<int>(std::find(s, s + 3, b0) - s);
        int step = L.triangle_sign[4 * t0 + a0] > 0 ? 1 : 2;
        int u = s[(pos + step) % 3];
        int v = s[(pos + 2 * step) % 3];
        (void)u;
        int f_in = v;  // face opposite v holds spoke wu

        // walk backwards first when the fan is open
        int ct = t0, ca = a0, cb = b0, cin = f_in;
        bool open = false;
        for (std::size_t guard = 0; guard <= 4 * static_cast<std::size_t>(n) * 3; ++guard) {
            int mi = L.member_index(ct, cin, ca);
            int pj = L.member_partner[mi];
            if (pj < 0) {
                open = true;
                break;
            }
            const Gluing& g = tri.gluing(ct, cin);
            int nt = g.tet, na = g.perm[ca], nb = g.perm[cb], nf = g.perm[cin];
            if (nt == t0 && na == a0 && nb == b0) break;
            ct = nt;
            ca = na;
            cb = nb;
            cin = other_face(ca, cb, nf);
        }
        if (!open) {
            ct = t0;
            ca = a0;
            cb = b0;
            cin = f_in;
        }
        // forward walk from (ct,ca,cb) entering through face cin
        int st = ct, sa = ca, sb = cb;
        while (true) {
            int cout = other_face(ca, cb, cin);
            FanEntry e{ct, ca, cb, L.member_index(ct, cin, ca), L.member_index(ct, cout, ca)};
            lv.fan.push_back(e);
            int mo = e.out_member;
            if (L.member_partner[mo] < 0) break;
            const Gluing& g = tri.gluing(ct, cout);
            int nt = g.tet, na = g.perm[ca], nb = g.perm[cb], nf = g.perm[cout];
            if (nt == st && na == sa && nb == sb) break;
            ct = nt;
            ca = na;
            cb = nb;
            cin = nf;
            if (lv.fan.size() > 12u * static_cast<std::size_t>(n)) throw Error("fan walk did not close");
        }
        lv.closed = !open;
    }
    return L;
}

VertexLink vertex_link(const Links& links, int v) {
    VertexLink vl;
    vl.vertex = v;
    vl.triangles = links.sk.vertices.at(v).members;
    for (int i = 0; i < static_cast<int>(links.arcs.size()); ++i) {
        if (links.arcs[i].vertex != v) continue;
        vl.arcs.push_back(i);
        if (links.arcs[i].boundary()) vl.closed = false;
    }
    for (int i = 0; i < static_cast<int>(links.lverts.size()); ++i)
        if (links.lverts[i].vertex == v) vl.vertices.push_back(i);
    for (int a : vl.arcs) {
        const ArcClass& ac = links.arcs[a];
        if (ac.members.size() != 2) continue;
        const ArcMember& x = ac.members[0];
        const ArcMember& y = ac.members[1];
        int dx = cycle_dir(x.face, x.corner) * links.triangle_sign[4 * x.tet + x.corner];
        int dy = cycle_dir(y.face, y.corner) * (ac.reversed[1] ? -1 : 1) *
                 links.triangle_sign[4 * y.tet + y.corner];
        if (dx == dy) vl.orientable = false;
    }
    return vl;
}

std::vector<VertexLink> vertex_links(const Links& links) {
    std::vector<VertexLink> out;
    for (int v = 0; v < static_cast<int>(links.sk.vertices.size()); ++v) out.push_back(vertex_link(links, v));
    return out;
}

}  // namespace ideal
