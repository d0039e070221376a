#include "ideal/crush.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ideal/skeleton.hpp"
#include "ideal/union_find.hpp"

namespace ideal {

std::string piece_type_name(PieceType t) {
    switch (t) {
        case PieceType::Tip: return "tip";
        case PieceType::TruncatedTet: return "truncated-tetrahedron";
        case PieceType::Prism: return "truncated-prism";
        case PieceType::TriBlock: return "triangular-product-block";
        case PieceType::QuadBlock: return "quad-product-block";
    }
    return "?";
}

int CellDecomposition::count(PieceType t) const {
    return static_cast<int>(
        std::count_if(pieces.begin(), pieces.end(), [&](const Piece& p) { return p.in_x && p.type == t; }));
}

std::vector<int> CellDecomposition::chain_lengths() const {
    std::vector<int> out;
    for (const auto& c : chains)
        if (!c.closed) out.push_back(static_cast<int>(c.prisms.size()));
    std::sort(out.begin(), out.end());
    return out;
}

std::string ObstructionReport::text() const {
    if (clear()) return "clear";
    std::vector<std::string> parts;
    if (no_truncated_tetrahedra) parts.push_back("no_truncated_tetrahedra");
    if (nontrivial_product_region) parts.push_back("nontrivial_product_region");
    if (!prism_cycles.empty()) parts.push_back("prism_cycles(" + std::to_string(prism_cycles.size()) + ")");
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
    return s;
}

namespace {

// Piece lookup inside one tetrahedron.
struct TetPieces {
    int tip[4] = {-1, -1, -1, -1};
    std::vector<int> tri_block[4];  // [corner][layer-1]
    int central = -1;
    int prism[4][4];
    std::vector<int> quad_block;  // [index-1]
    int q = -1, nq = 0;
    TetPieces() {
        for (auto& r : prism)
            for (int& x : r) x = -1;
    }
};

struct Builder {
    const Triangulation& tri;
    const NormalCoords& s;
    CellDecomposition& cd;
    std::vector<TetPieces> tp;

    int add(int t, PieceType type, int a, int b) {
        Piece p;
        p.tet = t;
        p.type = type;
        p.a = a;
        p.b = b;
        cd.pieces.push_back(p);
        int id = static_cast<int>(cd.pieces.size()) - 1;
        cd.tet_pieces[t].push_back(id);
        return id;
    }

    void build_pieces() {
        tp.resize(tri.size());
        cd.tet_pieces.assign(tri.size(), {});
        for (int t = 0; t < tri.size(); ++t) {
            TetPieces& P = tp[t];
            int kinds = 0;
            for (int q = 0; q < 3; ++q) {
                if (s.quad(t, q) < 0) throw Error("negative coordinate");
                if (s.quad(t, q) > 0) {
                    ++kinds;
                    P.q = q;
                    P.nq = s.quad(t, q);
                }
            }
            if (kinds > 1) throw Error("two quad types in tet " + tri.label(t));
            for (int x = 0; x < 4; ++x) {
                if (s.tri(t, x) < 0) throw Error("negative coordinate");
                if (s.tri(t, x) > 0) {
                    P.tip[x] = add(t, PieceType::Tip, x, 0);
                    cd.pieces[P.tip[x]].has_vertex = true;
                }
                for (int i = 1; i < s.tri(t, x); ++i) P.tri_block[x].push_back(add(t, PieceType::TriBlock, x, i));
            }
            if (P.nq == 0) {
                P.central = add(t, PieceType::TruncatedTet, -1, -1);
                for (int x = 0; x < 4; ++x)
                    if (s.tri(t, x) == 0) cd.pieces[P.central].has_vertex = true;
            } else {
                for (auto pair : kQuadPair[P.q]) {
                    int a = pair[0], b = pair[1];
                    int id = add(t, PieceType::Prism, a, b);
                    P.prism[a][b] = P.prism[b][a] = id;
                    if (s.tri(t, a) == 0 || s.tri(t, b) == 0) cd.pieces[id].has_vertex = true;
                }
                for (int j = 1; j < P.nq; ++j) P.quad_block.push_back(add(t, PieceType::QuadBlock, -1, j));
            }
        }
    }

    // Arcs cutting off corner x in face f.
    int arcs(int t, int f, int x) const { return s.arcs(t, f, x); }

    // Piece owning the face region at corner x, between arcs i and i+1 (x = -1: central region).
    int region(int t, int f, int x, int i) const {
        const TetPieces& P = tp[t];
        if (x < 0) {
            if (P.nq == 0) return P.central;
            int cut = -1;
            for (int v : kFaceVertex[f])
                if (quad_type(v, f) == P.q) cut = v;
            int y = -1, z = -1;
            for (int v : kFaceVertex[f]) {
                if (v == cut) continue;
                (y < 0 ? y : z) = v;
            }
            return P.prism[y][z];
        }
        int tx = s.tri(t, x);
        if (i < tx) return i == 0 ? P.tip[x] : P.tri_block[x][i - 1];
        if (P.nq == 0 || quad_type(x, f) != P.q) throw Error("region out of range");
        if (i == tx) return P.prism[x][f];
        int k = i - tx;
        bool zero_side = x == 0 || x == P.q + 1;
        int j = zero_side ? k : P.nq - k;
        return P.quad_block[j - 1];
    }
};

}  // namespace

namespace {

// Pieces and their components; no side chosen yet.
struct Split {
    CellDecomposition cd;
    std::vector<TetPieces> tp;
    UnionFind uf;
    std::map<int, bool> bad;  // component root -> meets a vertex or the boundary
};

Split split(const Triangulation& tri, const NormalCoords& s) {
    if (s.size() != tri.size()) throw Error("surface size does not match the triangulation");
    auto m = check_matching(tri, s);
    if (!m.admissible) throw Error("surface fails matching: " + m.violations.front());
    Split sp;
    CellDecomposition& cd = sp.cd;
    cd.surface = s;
    Builder B{tri, s, cd, {}};
    B.build_pieces();
    const int n = static_cast<int>(cd.pieces.size());
    sp.uf = UnionFind(n);
    UnionFind& uf = sp.uf;
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            std::vector<int> here;
            here.push_back(B.region(t, f, -1, 0));
            for (int x : kFaceVertex[f])
                for (int i = 0; i < B.arcs(t, f, x); ++i) here.push_back(B.region(t, f, x, i));
            if (!g.glued()) {
                for (int p : here) cd.pieces[p].on_boundary = true;
                continue;
            }
            int u = g.tet, fu = g.perm[f];
            uf.unite(B.region(t, f, -1, 0), B.region(u, fu, -1, 0));
            for (int x : kFaceVertex[f])
                for (int i = 0; i < B.arcs(t, f, x); ++i) uf.unite(B.region(t, f, x, i), B.region(u, fu, g.perm[x], i));
        }
    }
    for (int p = 0; p < n; ++p) {
        int r = uf.find(p);
        sp.bad[r] = sp.bad[r] || cd.pieces[p].has_vertex || cd.pieces[p].on_boundary;
    }
    sp.tp = std::move(B.tp);
    return sp;
}

}  // namespace

std::vector<int> vertex_free_sides(const Triangulation& tri, const NormalCoords& s) {
    Split sp = split(tri, s);
    std::vector<int> out;
    for (auto [r, b] : sp.bad)
        if (!b) out.push_back(r);
    return out;
}

CellDecomposition cell_decomposition(const Triangulation& tri, const NormalCoords& s, int side_hint) {
    Split sp = split(tri, s);
    CellDecomposition cd = std::move(sp.cd);
    Builder B{tri, s, cd, std::move(sp.tp)};
    UnionFind& uf = sp.uf;
    auto& bad = sp.bad;
    const int n = static_cast<int>(cd.pieces.size());
    if (side_hint >= 0) {
        if (side_hint >= n) throw Error("side hint out of range");
        int r = uf.find(side_hint);
        if (bad[r]) throw Error("hinted side contains a vertex or boundary");
        cd.x_component = r;
    } else {
        std::vector<int> good;
        for (auto [r, b] : bad)
            if (!b) good.push_back(r);
        if (good.empty()) throw Error("no vertex-free side");
        if (good.size() > 1) throw Error("ambiguous side: " + std::to_string(good.size()) + " vertex-free components");
        cd.x_component = good[0];
    }
    for (int p = 0; p < n; ++p) {
        cd.pieces[p].component = uf.find(p);
        cd.pieces[p].in_x = cd.pieces[p].component == cd.x_component;
    }

    // prism chains from each hexagonal face of a truncated tet
    std::vector<bool> visited(n, false);
    std::set<std::pair<int, int>> done;
    for (int t = 0; t < tri.size(); ++t) {
        int c = B.tp[t].central;
        if (B.tp[t].nq != 0 || !cd.pieces[c].in_x) continue;
        for (int f = 0; f < 4; ++f) {
            if (done.count({t, f})) continue;
            PrismChain ch;
            ch.from_tet = t;
            ch.from_face = f;
            Perm4 P;
            int cur = t, face = f;
            for (int guard = 0;; ++guard) {
                if (guard > n + 1) throw Error("prism chain did not terminate");
                const Gluing& g = tri.gluing(cur, face);
                P = g.perm * P;
                int nt = g.tet, nf = g.perm[face];
                int piece = B.region(nt, nf, -1, 0);
                if (cd.pieces[piece].type == PieceType::TruncatedTet) {
                    ch.to_tet = nt;
                    ch.to_face = nf;
                    break;
                }
                ch.prisms.push_back(piece);
                visited[piece] = true;
                const Piece& pr = cd.pieces[piece];
                int other = 6 - pr.a - pr.b - nf;
                P = Perm4::swap(nf, other) * P;
                cur = nt;
                face = other;
            }
            ch.perm = P;
            done.insert({t, f});
            done.insert({ch.to_tet, ch.to_face});
            cd.chains.push_back(std::move(ch));
        }
    }
    for (int p = 0; p < n; ++p) {
        if (!cd.pieces[p].in_x || cd.pieces[p].type != PieceType::Prism || visited[p]) continue;
        PrismChain ch;
        ch.closed = true;
        int cur = p;
        const Piece& start = cd.pieces[p];
        int face = -1;
        for (int v = 0; v < 4; ++v)
            if (v != start.a && v != start.b) face = v;
        int t = start.tet;
        for (int guard = 0; guard <= n; ++guard) {
            ch.prisms.push_back(cur);
            visited[cur] = true;
            const Gluing& g = tri.gluing(t, face);
            int nt = g.tet, nf = g.perm[face];
            int next = B.region(nt, nf, -1, 0);
            const Piece& pr = cd.pieces[next];
            if (pr.type != PieceType::Prism) throw Error("broken prism cycle");
            if (next == p) break;
            cur = next;
            t = nt;
            face = 6 - pr.a - pr.b - nf;
        }
        cd.chains.push_back(std::move(ch));
    }

    // product regions and their horizontal surfaces
    std::vector<int> blocks;
    for (int p = 0; p < n; ++p) {
        const Piece& pc = cd.pieces[p];
        if (pc.in_x && (pc.type == PieceType::TriBlock || pc.type == PieceType::QuadBlock)) blocks.push_back(p);
    }
    auto is_block = [&](int p) {
        return cd.pieces[p].type == PieceType::TriBlock || cd.pieces[p].type == PieceType::QuadBlock;
    };
    // vertices of K sit on tet edges between consecutive crossings
    auto crossings = [&](int t, int x, int y) {
        int q = B.tp[t].q, k = s.tri(t, x) + s.tri(t, y);
        if (B.tp[t].nq && quad_type(x, y) != q) k += B.tp[t].nq;
        return k;
    };
    auto key = [&](int t, int x, int y, int i) {
        int lo = std::min(x, y), hi = std::max(x, y);
        int from_lo = x == lo ? i : crossings(t, x, y) - i;
        return (t * 6 + kEdgeIndex[lo][hi]) * 4096 + from_lo;
    };
    std::map<int, int> key_id;
    auto kid = [&](int k) { return key_id.emplace(k, static_cast<int>(key_id.size())).first->second; };
    UnionFind buf(n);
    std::vector<std::pair<int, int>> kpairs;
    std::map<int, std::set<std::pair<int, int>>> edge_regions;  // block root -> face regions (canonical)
    struct Reg {
        int t, f, x, i;
    };
    std::vector<std::pair<int, Reg>> regs;
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            for (int x : kFaceVertex[f]) {
                for (int i = 0; i < B.arcs(t, f, x); ++i) {
                    int p = B.region(t, f, x, i);
                    if (!cd.pieces[p].in_x || !is_block(p)) continue;
                    regs.push_back({p, {t, f, x, i}});
                    const Gluing& g = tri.gluing(t, f);
                    int y = -1, z = -1;
                    for (int v : kFaceVertex[f]) {
                        if (v == x) continue;
                        (y < 0 ? y : z) = v;
                    }
                    kid(key(t, x, y, i));
                    kid(key(t, x, z, i));
                    if (!g.glued()) continue;
                    int u = g.tet, fu = g.perm[f];
                    int q = B.region(u, fu, g.perm[x], i);
                    if (!is_block(q)) continue;
                    buf.unite(p, q);
                    kpairs.push_back({kid(key(t, x, y, i)), kid(key(u, g.perm[x], g.perm[y], i))});
                    kpairs.push_back({kid(key(t, x, z, i)), kid(key(u, g.perm[x], g.perm[z], i))});
                }
            }
        }
    }
    UnionFind kuf(static_cast<int>(key_id.size()));
    for (auto [a, b] : kpairs) kuf.unite(a, b);
    std::map<int, ProductComponent> comps;
    for (int p : blocks) comps[buf.find(p)].blocks.push_back(p);
    std::map<int, std::set<int>> comp_vertices;
    std::map<int, int> comp_edge_sides;
    std::map<int, int> comp_glued_sides;
    for (auto& [p, r] : regs) {
        int root = buf.find(p);
        const Gluing& g = tri.gluing(r.t, r.f);
        bool inner = g.glued() && is_block(B.region(g.tet, g.perm[r.f], g.perm[r.x], r.i));
        if (inner) ++comp_glued_sides[root];
        else ++comp_edge_sides[root];
        int y = -1, z = -1;
        for (int v : kFaceVertex[r.f]) {
            if (v == r.x) continue;
            (y < 0 ? y : z) = v;
        }
        comp_vertices[root].insert(kuf.find(kid(key(r.t, r.x, y, r.i))));
        comp_vertices[root].insert(kuf.find(kid(key(r.t, r.x, z, r.i))));
    }
    for (auto& [root, pc] : comps) {
        pc.faces = static_cast<int>(pc.blocks.size());
        pc.edges = comp_edge_sides[root] + comp_glued_sides[root] / 2;
        pc.boundary_edges = comp_edge_sides[root];
        pc.vertices = static_cast<int>(comp_vertices[root].size());
        cd.products.push_back(pc);
    }
    return cd;
}

ObstructionReport obstructions(const CellDecomposition& cd) {
    ObstructionReport r;
    r.no_truncated_tetrahedra = cd.count(PieceType::TruncatedTet) == 0;
    for (const auto& pc : cd.products)
        if (!pc.trivial()) r.nontrivial_product_region = true;
    for (int i = 0; i < static_cast<int>(cd.chains.size()); ++i)
        if (cd.chains[i].closed) r.prism_cycles.push_back(i);
    return r;
}

Triangulation crush(const Triangulation& tri, const CellDecomposition& cd) {
    ObstructionReport rep = obstructions(cd);
    if (!rep.clear()) throw ObstructionError(rep);
    Triangulation out(tri.name() + "-crushed");
    std::vector<int> new_id(tri.size(), -1);
    for (const Piece& p : cd.pieces)
        if (p.in_x && p.type == PieceType::TruncatedTet) new_id[p.tet] = 0;
    for (int t = 0; t < tri.size(); ++t)
        if (new_id[t] == 0) new_id[t] = out.add_tet(tri.label(t) + "*");
    for (const PrismChain& ch : cd.chains) {
        int a = new_id[ch.from_tet], b = new_id[ch.to_tet];
        const Gluing& cur = out.gluing(a, ch.from_face);
        if (cur.glued()) {
            if (cur.tet != b || cur.perm != ch.perm) throw Error("inconsistent induced gluing");
            continue;
        }
        out.glue(a, ch.from_face, b, ch.perm);
    }
    return out;
}

Triangulation crush(const Triangulation& tri, const NormalCoords& s, int side_hint) {
    return crush(tri, cell_decomposition(tri, s, side_hint));
}

std::vector<NormalCoords> boundary_linking_components(const Triangulation& tri) {
    if (tri.closed()) throw Error("triangulation has no boundary");
    Skeleton sk = skeleton(tri);
    // boundary components as classes of boundary vertices
    UnionFind vuf(static_cast<int>(sk.vertices.size()));
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.boundary(t, f)) {
                const auto& fv = kFaceVertex[f];
                vuf.unite(sk.vertex_of[t][fv[0]], sk.vertex_of[t][fv[1]]);
                vuf.unite(sk.vertex_of[t][fv[0]], sk.vertex_of[t][fv[2]]);
            }
    std::map<int, int> comp;
    for (int v = 0; v < static_cast<int>(sk.vertices.size()); ++v)
        if (sk.vertices[v].boundary) comp.emplace(vuf.find(v), static_cast<int>(comp.size()));
    std::vector<NormalCoords> out(comp.size(), NormalCoords(tri.size()));
    auto cof = [&](int t, int x) { return comp.at(vuf.find(sk.vertex_of[t][x])); };
    for (int t = 0; t < tri.size(); ++t) {
        std::vector<int> bf, be;
        for (int f = 0; f < 4; ++f)
            if (tri.boundary(t, f)) bf.push_back(f);
        for (int e = 0; e < 6; ++e)
            if (sk.edges[sk.edge_of[t][e]].boundary) be.push_back(e);
        auto bv = [&](int x) { return sk.vertices[sk.vertex_of[t][x]].boundary; };
        auto fail = [&]() { throw Error("boundary not normal at tet " + tri.label(t)); };
        if (bf.size() > 1) fail();
        if (bf.size() == 1) {
            int f = bf[0];
            if (be.size() != 3) fail();
            for (int e : be)
                if (kEdgeVertex[e][0] == f || kEdgeVertex[e][1] == f) fail();
            ++out[cof(t, (f + 1) % 4)].tri(t, f);
            if (bv(f)) ++out[cof(t, f)].tri(t, f);
            continue;
        }
        if (be.empty()) {
            for (int x = 0; x < 4; ++x)
                if (bv(x)) ++out[cof(t, x)].tri(t, x);
        } else if (be.size() == 1) {
            int a = kEdgeVertex[be[0]][0], b = kEdgeVertex[be[0]][1];
            ++out[cof(t, a)].quad(t, quad_type(a, b));
            for (int x = 0; x < 4; ++x)
                if (x != a && x != b && bv(x)) ++out[cof(t, x)].tri(t, x);
        } else if (be.size() == 2 && be[0] + be[1] == 5) {
            int a = kEdgeVertex[be[0]][0], b = kEdgeVertex[be[0]][1];
            int c = kEdgeVertex[be[1]][0];
            ++out[cof(t, a)].quad(t, quad_type(a, b));
            ++out[cof(t, c)].quad(t, quad_type(a, b));
        } else {
            fail();
        }
    }
    for (const auto& c : out) {
        auto m = check_matching(tri, c);
        if (!m.admissible) throw Error("boundary not normal: " + m.violations.front());
    }
    return out;
}

NormalCoords boundary_linking_coords(const Triangulation& tri) {
    auto parts = boundary_linking_components(tri);
    NormalCoords sum(tri.size());
    for (const auto& p : parts) sum = sum + p;
    auto m = check_matching(tri, sum);
    if (!m.admissible) throw Error("boundary not normal: " + m.violations.front());
    return sum;
}

Triangulation crush_along_boundary(const Triangulation& tri) {
    NormalCoords s = boundary_linking_coords(tri);
    return crush(tri, cell_decomposition(tri, s));
}

std::string describe(const CellDecomposition& cd, const Triangulation& tri) {
    std::ostringstream out;
    out << "truncated-tetrahedra " << cd.count(PieceType::TruncatedTet) << "\n";
    out << "truncated-prisms " << cd.count(PieceType::Prism) << "\n";
    out << "triangular-product-blocks " << cd.count(PieceType::TriBlock) << "\n";
    out << "quad-product-blocks " << cd.count(PieceType::QuadBlock) << "\n";
    for (const auto& ch : cd.chains) {
        if (ch.closed) {
            out << "prism-cycle";
        } else {
            out << "chain " << tri.label(ch.from_tet) << "(" << face_name(ch.from_face) << ") ->";
        }
        for (int p : ch.prisms) {
            const Piece& pc = cd.pieces[p];
            out << " " << tri.label(pc.tet) << "[" << pc.a << pc.b << "]";
        }
        if (!ch.closed) {
            std::string img;
            for (int v : kFaceVertex[ch.from_face]) img += static_cast<char>('0' + ch.perm[v]);
            out << " -> " << tri.label(ch.to_tet) << "(" << img << ")";
        }
        out << "\n";
    }
    for (const auto& pc : cd.products)
        out << "product-region blocks " << pc.blocks.size() << " euler " << pc.euler() << (pc.trivial() ? " disk" : "") << "\n";
    return out.str();
}

}  // namespace ideal
