#include "ideal/inflate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ideal/union_find.hpp"

namespace ideal {

std::vector<int> ConfigPolygon::marks() const {
    std::vector<int> m;
    for (const auto& e : entries) m.push_back(e.mark);
    return m;
}

// ---------------------------------------------------------------- polygons

namespace {

void decompose(std::vector<PieceSide> sides, Decomposition& d) {
    const int n = static_cast<int>(sides.size());
    if (n == 0) return;
    auto push = [&](PieceKind k, std::vector<PieceSide> s) { d.pieces.push_back({k, std::move(s)}); };
    auto one_mark = [&](std::vector<PieceSide> s) {
        if (s.size() < 2) throw Error("configuration polygon has a lone side of one mark");
        PieceKind k = s.size() == 2 ? PieceKind::Generic : PieceKind::Branch;
        push(k, std::move(s));
    };
    bool same = std::all_of(sides.begin(), sides.end(), [&](const PieceSide& s) { return s.mark == sides[0].mark; });
    if (same) {
        one_mark(std::move(sides));
        return;
    }
    int s0 = 0;
    while (sides[s0].mark == sides[(s0 + n - 1) % n].mark) ++s0;
    std::vector<PieceSide> rot(sides.begin() + s0, sides.end());
    rot.insert(rot.end(), sides.begin(), sides.begin() + s0);
    std::vector<std::pair<int, int>> runs;  // (begin, length) in rot
    for (int i = 0; i < n; ++i) {
        if (i > 0 && rot[i].mark == rot[i - 1].mark)
            ++runs.back().second;
        else
            runs.emplace_back(i, 1);
    }
    if (runs.size() == 2) {
        for (auto [b, len] : runs) one_mark(std::vector<PieceSide>(rot.begin() + b, rot.begin() + b + len));
        return;
    }
    bool alternating = std::all_of(runs.begin(), runs.end(), [](auto r) { return r.second == 1; });
    if (alternating) {
        if (n == 4) {
            push(PieceKind::Crossing, std::move(sides));
            return;
        }
        // cone from an interior point over a + side and the - side three steps on
        int p = 0;
        while (sides[p].mark != 1) ++p;
        auto at = [&](int i) { return sides[((p + i) % n + n) % n]; };
        int c1 = d.chords++, c2 = d.chords++, c3 = d.chords++, c4 = d.chords++;
        auto ch = [](int id, bool rev, int mark) { return PieceSide{-1 - id, rev, mark}; };
        push(PieceKind::Branch, {at(0), ch(c1, false, 1), ch(c2, false, 1)});
        push(PieceKind::Branch, {at(3), ch(c3, false, -1), ch(c4, false, -1)});
        decompose({at(1), at(2), ch(c4, true, -1), ch(c1, true, 1)}, d);
        std::vector<PieceSide> rest;
        for (int i = 4; i < n; ++i) rest.push_back(at(i));
        rest.push_back(ch(c2, true, 1));
        rest.push_back(ch(c3, true, -1));
        decompose(std::move(rest), d);
        return;
    }
    std::vector<PieceSide> rest;
    for (auto [b, len] : runs) {
        if (len == 1) {
            rest.push_back(rot[b]);
            continue;
        }
        int c = d.chords++;
        std::vector<PieceSide> piece(rot.begin() + b, rot.begin() + b + len);
        piece.push_back({-1 - c, true, rot[b].mark});
        push(PieceKind::Branch, std::move(piece));
        rest.push_back({-1 - c, false, rot[b].mark});
    }
    decompose(std::move(rest), d);
}

}  // namespace

Decomposition decompose_polygon(const std::vector<int>& marks) {
    Decomposition d;
    std::vector<PieceSide> sides;
    for (int i = 0; i < static_cast<int>(marks.size()); ++i) {
        if (marks[i] != 1 && marks[i] != -1) throw Error("bad polygon mark");
        sides.push_back({i, false, marks[i]});
    }
    decompose(std::move(sides), d);
    for (const auto& p : d.pieces) {
        if (p.kind == PieceKind::Crossing) ++d.crossings;
        d.added += p.added();
    }
    return d;
}

PolygonPlan fan_plan(int k, int apex) {
    PolygonPlan plan;
    auto wrap = [k](int v) { return (v - 1) % k + 1; };
    for (int i = 1; i + 1 < k; ++i) {
        std::array<int, 3> t{apex, wrap(apex + i), wrap(apex + i + 1)};
        std::sort(t.begin(), t.end());
        plan.push_back(t);
    }
    return plan;
}

namespace {

void plans_rec(const std::vector<int>& poly, std::vector<PolygonPlan>& out) {
    if (poly.size() < 3) {
        out.push_back({});
        return;
    }
    const int m = static_cast<int>(poly.size());
    for (int i = 1; i + 1 < m; ++i) {
        std::vector<PolygonPlan> left, right;
        plans_rec(std::vector<int>(poly.begin(), poly.begin() + i + 1), left);
        plans_rec(std::vector<int>(poly.begin() + i, poly.end()), right);
        for (const auto& l : left) {
            for (const auto& r : right) {
                PolygonPlan p = l;
                p.insert(p.end(), r.begin(), r.end());
                std::array<int, 3> t{poly.front(), poly[i], poly.back()};
                std::sort(t.begin(), t.end());
                p.push_back(t);
                std::sort(p.begin(), p.end());
                out.push_back(std::move(p));
            }
        }
    }
}

}  // namespace

std::vector<PolygonPlan> polygon_plans(int k) {
    std::vector<int> poly;
    for (int i = 1; i <= k; ++i) poly.push_back(i);
    std::vector<PolygonPlan> out;
    plans_rec(poly, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool valid_plan(int k, const PolygonPlan& plan) {
    if (k < 3 || static_cast<int>(plan.size()) != k - 2) return false;
    std::map<std::pair<int, int>, int> uses;
    for (auto t : plan) {
        std::sort(t.begin(), t.end());
        if (t[0] < 1 || t[2] > k || t[0] == t[1] || t[1] == t[2]) return false;
        ++uses[{t[0], t[1]}];
        ++uses[{t[1], t[2]}];
        ++uses[{t[0], t[2]}];
    }
    std::vector<std::pair<int, int>> diag;
    for (auto [e, c] : uses) {
        bool side = e.second == e.first + 1 || (e.first == 1 && e.second == k);
        if (side && c != 1) return false;
        if (!side) {
            if (c != 2) return false;
            diag.push_back(e);
        }
    }
    for (int i = 1; i <= k; ++i) {
        int j = i == k ? 1 : i + 1;
        if (!uses.count({std::min(i, j), std::max(i, j)})) return false;
    }
    for (auto [a, b] : diag)
        for (auto [c, e] : diag)
            if (a < c && c < b && b < e) return false;
    return true;
}

// ---------------------------------------------------------------- chains

namespace {

struct ArcInfo {
    DirectedArc da;
    int side;
    int frame;
};

std::map<int, ArcInfo> frame_arcs(const Links& links, const std::vector<Frame>& frames) {
    std::map<int, ArcInfo> info;
    for (int fi = 0; fi < static_cast<int>(frames.size()); ++fi) {
        for (const Branch& b : frames[fi].branches) {
            if (b.side.size() != b.arcs.size()) throw Error("frame has no transverse sides");
            for (std::size_t j = 0; j < b.arcs.size(); ++j) {
                if (!info.emplace(b.arcs[j].arc, ArcInfo{b.arcs[j], b.side[j], fi}).second)
                    throw Error("arc " + links.arcs[b.arcs[j].arc].name + " used twice");
            }
        }
    }
    return info;
}

std::pair<int, int> other_corners(int f, int a) {
    int r[2], k = 0;
    for (int v : kFaceVertex[f])
        if (v != a) r[k++] = v;
    return {r[0], r[1]};
}

}  // namespace

std::vector<FaceChain> face_chains(const Triangulation& tri, const Links& links, const std::vector<Frame>& frames,
                                   const FaceOrders& orders) {
    auto info = frame_arcs(links, frames);
    std::map<int, std::vector<int>> by_face;
    for (auto& [arc, ai] : info) {
        const ArcMember& rep = links.arcs[arc].members[0];
        if (links.arcs[arc].members.size() != 2) throw Error("frame arc on a boundary face");
        by_face[links.sk.face_of[rep.tet][rep.face]].push_back(arc);
    }
    std::vector<FaceChain> out;
    for (auto& [fc, arcs] : by_face) {
        std::vector<int> order = arcs;
        auto it = orders.find(fc);
        if (it != orders.end()) {
            std::vector<int> a = it->second, b = arcs;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) throw Error("face order does not match the frame arcs in face " + std::to_string(fc));
            order = it->second;
        }
        FaceChain ch;
        ch.face_class = fc;
        const ArcMember& rep0 = links.arcs[order[0]].members[0];
        ch.tet = rep0.tet;
        ch.face = rep0.face;
        const Gluing& g = tri.gluing(ch.tet, ch.face);
        ch.other_tet = g.tet;
        ch.other_face = g.perm[ch.face];
        ch.perm = g.perm;
        if (ch.other_tet == ch.tet && ch.other_face == ch.face) throw Error("face glued to itself");
        for (int arc : order) {
            const ArcMember& rep = links.arcs[arc].members[0];
            if (rep.tet != ch.tet || rep.face != ch.face) throw Error("inconsistent face chain");
            const ArcInfo& ai = info.at(arc);
            auto [b, c] = other_corners(rep.face, rep.corner);
            ChainSlot s;
            s.arc = arc;
            s.corner = rep.corner;
            s.start = ai.da.reversed ? c : b;
            s.finish = ai.da.reversed ? b : c;
            int canonical = links.member_index(rep.tet, rep.face, rep.corner);
            s.near = ai.side == canonical ? 1 : 0;
            ch.slots.push_back(s);
        }
        out.push_back(std::move(ch));
    }
    return out;
}

std::vector<ConfigPolygon> config_polygons(const Triangulation& tri, const Links& links,
                                           const std::vector<Frame>& frames, const FaceOrders& orders) {
    auto chains = face_chains(tri, links, frames, orders);
    auto info = frame_arcs(links, frames);
    std::map<int, const FaceChain*> by_face;
    for (const auto& ch : chains) by_face[ch.face_class] = &ch;
    const Skeleton& sk = links.sk;
    std::vector<ConfigPolygon> out;
    for (int e = 0; e < static_cast<int>(sk.edges.size()); ++e) {
        const EdgeClass& ec = sk.edges[e];
        if (ec.self_reversed) throw Error("edge identified with itself reversed");
        ConfigPolygon poly;
        poly.edge = e;
        int t0 = ec.members[0].tet;
        int al0 = kEdgeVertex[ec.members[0].edge][0], be0 = kEdgeVertex[ec.members[0].edge][1];
        auto [ga, de] = std::pair<int, int>{-1, -1};
        for (int v = 0; v < 4; ++v) {
            if (v == al0 || v == be0) continue;
            if (ga < 0) ga = v;
            else de = v;
        }
        int t = t0, al = al0, be = be0, in = de, out_opp = ga;
        for (int guard = 0;; ++guard) {
            if (guard > 6 * tri.size()) throw Error("edge walk did not close");
            int fc = sk.face_of[t][out_opp];
            auto it = by_face.find(fc);
            if (it != by_face.end()) {
                const FaceChain& ch = *it->second;
                bool forward = t == ch.tet && out_opp == ch.face;
                int ra = al, rb = be;
                if (!forward) {
                    Perm4 inv = ch.perm.inverse();
                    ra = inv[al];
                    rb = inv[be];
                }
                int k = static_cast<int>(ch.slots.size());
                for (int i = 0; i < k; ++i) {
                    const ChainSlot& s = ch.slots[forward ? i : k - 1 - i];
                    if (s.corner != ra && s.corner != rb) continue;
                    PolygonEntry pe;
                    pe.mark = s.corner == ra ? 1 : -1;
                    int apex_role = s.corner == ra ? rb : ra;
                    pe.arc = s.arc;
                    pe.at_initial = apex_role == s.start;
                    pe.apex = apex_role == s.start ? 2 : 3;
                    pe.from = forward ? s.near : 1 - s.near;
                    pe.to = 1 - pe.from;
                    pe.side = info.at(s.arc).side;
                    poly.entries.push_back(pe);
                }
            }
            const Gluing& g = tri.gluing(t, out_opp);
            if (!g.glued()) throw Error("edge walk reached a boundary face");
            int nt = g.tet, na = g.perm[al], nb = g.perm[be], nin = g.perm[out_opp];
            int nout = 6 - na - nb - nin;
            t = nt;
            al = na;
            be = nb;
            in = nin;
            out_opp = nout;
            if (t == t0 && al == al0 && be == be0 && in == de) break;
        }
        out.push_back(std::move(poly));
    }
    return out;
}

// ---------------------------------------------------------------- assembly

namespace {

int add_tet(InflationWork& w, const std::string& label, Provenance p) {
    int t = w.tri.add_tet(label);
    w.provenance.push_back(p);
    for (auto& c : w.coords) c.rows.push_back(NormalRow{});
    return t;
}

// Glues the face of A spanned by am(roles) to the face of B spanned by bm(roles).
void glue_roles(Triangulation& tri, int A, const std::array<int, 4>& am, int B, const std::array<int, 4>& bm,
                const std::array<int, 3>& roles) {
    int out[4] = {-1, -1, -1, -1};
    int sa = 0, sb = 0;
    for (int r : roles) {
        out[am[r]] = bm[r];
        sa += am[r];
        sb += bm[r];
    }
    out[6 - sa] = 6 - sb;
    tri.glue(A, 6 - sa, B, Perm4(out[0], out[1], out[2], out[3]));
}

struct Attachment {
    int tet, from, to, apex;
};

void glue_attachments(Triangulation& tri, const Attachment& a, const Attachment& b) {
    int out[4] = {-1, -1, -1, -1};
    out[a.from] = b.from;
    out[a.to] = b.to;
    out[a.apex] = b.apex;
    int fa = 6 - a.from - a.to - a.apex, fb = 6 - b.from - b.to - b.apex;
    out[fa] = fb;
    tri.glue(a.tet, fa, b.tet, Perm4(out[0], out[1], out[2], out[3]));
}

}  // namespace

void inflate_face(InflationWork& work, const FaceChain& chain) {
    if (chain.slots.empty() || chain.slots.size() > 3) throw Error("face chain must hold 1 to 3 arcs");
    std::array<int, 3> roles{};
    {
        int k = 0;
        for (int v : kFaceVertex[chain.face]) roles[k++] = v;
    }
    int prev = chain.tet;
    std::array<int, 4> pm{0, 1, 2, 3};
    for (const ChainSlot& s : chain.slots) {
        int x = work.arc_tet.at(s.arc);
        std::array<int, 4> back{}, fwd{};
        back[s.corner] = s.near;
        back[s.start] = 2;
        back[s.finish] = 3;
        fwd = back;
        fwd[s.corner] = 1 - s.near;
        glue_roles(work.tri, prev, pm, x, back, roles);
        prev = x;
        pm = fwd;
    }
    std::array<int, 4> om{};
    for (int r = 0; r < 4; ++r) om[r] = chain.perm[r];
    glue_roles(work.tri, prev, pm, chain.other_tet, om, roles);
}

Decomposition inflate_edge(InflationWork& work, const ConfigPolygon& poly, int edge, int recording_vertex,
                           int far_vertex, const std::map<int, PolygonPlan>& plans) {
    Decomposition dec = decompose_polygon(poly.marks());
    const int n = static_cast<int>(poly.entries.size());
    const int D = n + dec.chords;
    ParityUnionFind uf(std::max(D, 1));
    std::vector<std::vector<Attachment>> att(D);
    auto didx = [n](const PieceSide& s) { return s.ref >= 0 ? s.ref : n + (-1 - s.ref); };
    auto attach = [&](const PieceSide& s, Attachment a) {
        if (s.reversed) std::swap(a.from, a.to);
        att[didx(s)].push_back(a);
    };
    for (int i = 0; i < n; ++i) {
        const PolygonEntry& e = poly.entries[i];
        att[i].push_back({work.arc_tet.at(e.arc), e.from, e.to, e.apex});
    }
    int crossing_no = 0, branch_no = 0, branch_piece = 0;
    const std::string tag = "@e" + std::to_string(edge) + "#";
    for (const ConfigPiece& piece : dec.pieces) {
        if (piece.kind == PieceKind::Generic) {
            const PieceSide& a = piece.sides[0];
            const PieceSide& b = piece.sides[1];
            if (!uf.unite(didx(a), didx(b), 1 ^ (a.reversed ? 1 : 0) ^ (b.reversed ? 1 : 0)))
                throw Error("inconsistent generic identification");
        } else if (piece.kind == PieceKind::Crossing) {
            int c = add_tet(work, "c" + tag + std::to_string(crossing_no++), {Origin::Crossing, edge, edge});
            // start at a far-end side whose free face runs from copy 0
            int r = -1;
            for (int i = 0; i < 4 && r < 0; ++i) {
                const PieceSide& s = piece.sides[i];
                if (s.mark == -1 && s.ref >= 0 && !s.reversed && poly.entries[s.ref].from == 0) r = i;
            }
            for (int i = 0; i < 4 && r < 0; ++i)
                if (piece.sides[i].mark == -1) r = i;
            static constexpr int table[4][3] = {{0, 2, 3}, {3, 1, 2}, {2, 0, 1}, {1, 3, 0}};
            for (int k = 0; k < 4; ++k) {
                const PieceSide& s = piece.sides[(r + k) % 4];
                attach(s, {c, table[k][0], table[k][1], table[k][2]});
            }
            ++work.coords[far_vertex].quad(c, 1);
            ++work.coords[recording_vertex].quad(c, 1);
        } else {
            const int k = static_cast<int>(piece.sides.size());
            PolygonPlan plan = fan_plan(k);
            auto pit = plans.find(branch_piece);
            if (pit != plans.end()) {
                if (!valid_plan(k, pit->second)) throw Error("invalid subdivision plan");
                plan = pit->second;
            }
            ++branch_piece;
            int cone = piece.sides[0].mark == 1 ? far_vertex : recording_vertex;
            int base = piece.sides[0].mark == 1 ? recording_vertex : far_vertex;
            std::vector<int> tets;
            std::vector<std::array<int, 3>> tris;
            for (auto tr : plan) {
                std::sort(tr.begin(), tr.end());
                int b = add_tet(work, "b" + tag + std::to_string(branch_no++), {Origin::Branch, edge, edge});
                tets.push_back(b);
                tris.push_back(tr);
                ++work.coords[cone].tri(b, 0);
                ++work.coords[base].tri(b, 0);
            }
            auto local = [&](int ti, int v) {
                for (int j = 0; j < 3; ++j)
                    if (tris[ti][j] == v) return j + 1;
                return -1;
            };
            for (int i = 1; i <= k; ++i) {
                int u = i == 1 ? k : i - 1, v = i;
                int found = -1;
                for (int ti = 0; ti < static_cast<int>(tris.size()) && found < 0; ++ti)
                    if (local(ti, u) > 0 && local(ti, v) > 0) found = ti;
                attach(piece.sides[i - 1], {tets[found], local(found, u), local(found, v), 0});
            }
            for (int x = 0; x < static_cast<int>(tris.size()); ++x) {
                for (int y = x + 1; y < static_cast<int>(tris.size()); ++y) {
                    std::vector<int> shared;
                    for (int v : tris[x])
                        if (local(y, v) > 0) shared.push_back(v);
                    if (shared.size() != 2) continue;
                    Attachment a{tets[x], local(x, shared[0]), local(x, shared[1]), 0};
                    Attachment b{tets[y], local(y, shared[0]), local(y, shared[1]), 0};
                    glue_attachments(work.tri, a, b);
                }
            }
        }
    }
    std::map<int, std::vector<Attachment>> groups;
    for (int d = 0; d < D; ++d) {
        auto [root, par] = uf.find(d);
        for (Attachment a : att[d]) {
            if (par) std::swap(a.from, a.to);
            groups[root].push_back(a);
        }
    }
    for (auto& [root, list] : groups) {
        if (list.size() != 2)
            throw Error("free face mismatch at edge " + std::to_string(edge) + ": " + std::to_string(list.size()) +
                        " faces meet");
        glue_attachments(work.tri, list[0], list[1]);
    }
    return dec;
}

InflationResult inflate(const Triangulation& tri, const std::vector<Frame>& frames, const InflateOptions& options) {
    Links links = build_links(tri);
    return inflate(tri, links, frames, options);
}

InflationResult inflate(const Triangulation& tri, const Links& links, const std::vector<Frame>& frames,
                        const InflateOptions& options) {
    auto problems = validate(tri);
    if (!problems.empty()) throw Error("invalid triangulation: " + problems.front());
    if (!tri.closed()) throw Error("input has boundary faces");
    const Skeleton& sk = links.sk;
    const int V = static_cast<int>(sk.vertices.size());
    for (int v = 0; v < V; ++v) {
        VertexLink vl = vertex_link(links, v);
        if (vl.sphere()) throw Error("vertex " + std::to_string(v) + " has a sphere link");
        if (!vl.closed) throw Error("vertex " + std::to_string(v) + " has a link with boundary");
    }
    std::vector<int> seen(V, 0);
    for (const Frame& f : frames) {
        auto rep = validate_frame(links, f);
        if (!rep.valid) throw Error("invalid frame: " + rep.problems.front());
        if (f.vertex < 0 || f.vertex >= V || seen[f.vertex]++) throw Error("frames must cover each vertex once");
    }
    for (int v = 0; v < V; ++v)
        if (!seen[v]) throw Error("no frame for vertex " + std::to_string(v));
    for (const auto& e : sk.edges)
        if (e.self_reversed) throw Error("edge identified with itself reversed");

    InflationResult res;
    if (options.use_orders) {
        res.orders = options.orders;
        Complexity c = complexity(tri, links, frames);
        res.stats = c.stats;
    } else {
        Complexity c = complexity(tri, links, frames);
        res.orders = c.orders;
        res.stats = c.stats;
    }

    auto chains = face_chains(tri, links, frames, res.orders);
    std::set<std::pair<int, int>> inflated;
    for (const auto& ch : chains) {
        inflated.insert({ch.tet, ch.face});
        inflated.insert({ch.other_tet, ch.other_face});
    }

    InflationWork w;
    w.tri.set_name(tri.name() + "-inflated");
    w.coords.assign(V, NormalCoords(0));
    for (int t = 0; t < tri.size(); ++t) add_tet(w, tri.label(t), {Origin::Original, t, -1});
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (inflated.count({t, f}) || w.tri.gluing(t, f).glued()) continue;
            w.tri.glue(t, f, g.tet, g.perm);
        }
        for (int a = 0; a < 4; ++a) ++w.coords[sk.vertex_of[t][a]].tri(t, a);
    }
    for (const Frame& f : frames) {
        for (const Branch& b : f.branches) {
            for (const auto& da : b.arcs) {
                int x = add_tet(w, links.arcs[da.arc].name, {Origin::FrameArc, da.arc, -1});
                w.arc_tet[da.arc] = x;
            }
        }
    }
    for (const auto& ch : chains) {
        for (const ChainSlot& s : ch.slots) {
            int x = w.arc_tet.at(s.arc);
            ++w.coords[sk.vertex_of[ch.tet][s.corner]].quad(x, 0);
            ++w.coords[sk.vertex_of[ch.tet][s.start]].tri(x, 2);
            ++w.coords[sk.vertex_of[ch.tet][s.finish]].tri(x, 3);
        }
        inflate_face(w, ch);
    }

    res.polygons = config_polygons(tri, links, frames, res.orders);
    for (const ConfigPolygon& poly : res.polygons) {
        const EdgeClass& ec = sk.edges[poly.edge];
        int t0 = ec.members[0].tet;
        int rec = sk.vertex_of[t0][kEdgeVertex[ec.members[0].edge][0]];
        int far = sk.vertex_of[t0][kEdgeVertex[ec.members[0].edge][1]];
        std::map<int, PolygonPlan> plans;
        for (auto& [key, plan] : options.plans)
            if (key.first == poly.edge) plans[key.second] = plan;
        Decomposition d = inflate_edge(w, poly, poly.edge, rec, far, plans);
        res.crossings += d.crossings;
        res.added += d.added;
        res.decompositions.push_back(std::move(d));
    }
    res.C = res.stats.e + res.crossings + 2 * (res.stats.b - res.stats.vb);
    res.tri = std::move(w.tri);
    res.provenance = std::move(w.provenance);
    res.boundary_coords = std::move(w.coords);
    return res;
}

std::vector<NormalCoords> boundary_linking(const InflationResult& result) { return result.boundary_coords; }

std::string provenance_report(const InflationResult& result, const Links& links) {
    std::ostringstream out;
    for (int t = 0; t < result.tri.size(); ++t) {
        const Provenance& p = result.provenance[t];
        out << result.tri.label(t) << " ";
        switch (p.kind) {
            case Origin::Original: out << "original " << p.ref; break;
            case Origin::FrameArc: out << "arc " << links.arcs[p.ref].name; break;
            case Origin::Crossing: out << "crossing e" << p.edge; break;
            case Origin::Branch: out << "branch e" << p.edge; break;
        }
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------- complexity

Complexity complexity(const Triangulation& tri, const Links& links, const std::vector<Frame>& frames) {
    Complexity best;
    best.stats = frame_stats(links, frames);
    auto chains = face_chains(tri, links, frames, {});
    std::vector<std::pair<int, std::vector<int>>> multi;
    for (const auto& ch : chains) {
        if (ch.slots.size() < 2) continue;
        std::vector<int> arcs;
        for (const auto& s : ch.slots) arcs.push_back(s.arc);
        std::sort(arcs.begin(), arcs.end());
        multi.emplace_back(ch.face_class, arcs);
    }
    FaceOrders cur;
    for (auto& [fc, arcs] : multi) cur[fc] = arcs;
    bool have = false;
    while (true) {
        auto polys = config_polygons(tri, links, frames, cur);
        int x = 0;
        for (const auto& p : polys) x += decompose_polygon(p.marks()).crossings;
        if (!have || x < best.crossings) {
            best.crossings = x;
            best.orders = cur;
            have = true;
        }
        // next combination: odometer over per-face permutations
        std::size_t k = 0;
        for (; k < multi.size(); ++k) {
            auto& v = cur[multi[k].first];
            if (std::next_permutation(v.begin(), v.end())) break;
        }
        if (k == multi.size()) break;
    }
    best.C = best.stats.e + best.crossings + 2 * (best.stats.b - best.stats.vb);
    return best;
}

}  // namespace ideal
