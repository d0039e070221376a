#pragma once
// Helpers shared by the unit tests and the acceptance runner. Everything
// here is computed independently of the library code under test.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ideal/io.hpp"
#include "ideal/normal.hpp"
#include "ideal/skeleton.hpp"
#include "ideal/triangulation.hpp"

namespace oracle {

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }
inline ideal::Triangulation load(const std::string& name) { return ideal::read_tri(fixture(name)); }

// Invariant factors of an integer matrix (rows x cols), nonzero only.
inline std::vector<long> invariant_factors(std::vector<std::vector<long>> m) {
    std::vector<long> out;
    const int R = static_cast<int>(m.size());
    const int C = R ? static_cast<int>(m[0].size()) : 0;
    int r0 = 0;
    for (int c0 = 0; c0 < C && r0 < R; ++c0) {
        while (true) {
            // smallest nonzero entry in the remaining block
            int br = -1, bc = -1;
            for (int i = r0; i < R; ++i)
                for (int j = c0; j < C; ++j)
                    if (m[i][j] && (br < 0 || std::labs(m[i][j]) < std::labs(m[br][bc]))) br = i, bc = j;
            if (br < 0) return out;
            std::swap(m[r0], m[br]);
            for (auto& row : m) std::swap(row[c0], row[bc]);
            bool clean = true;
            for (int i = r0 + 1; i < R; ++i) {
                long q = m[i][c0] / m[r0][c0];
                for (int j = c0; j < C; ++j) m[i][j] -= q * m[r0][j];
                if (m[i][c0]) clean = false;
            }
            for (int j = c0 + 1; j < C; ++j) {
                long q = m[r0][j] / m[r0][c0];
                for (int i = r0; i < R; ++i) m[i][j] -= q * m[i][c0];
                if (m[r0][j]) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (int i = r0 + 1; i < R && divides; ++i)
                for (int j = c0 + 1; j < C && divides; ++j)
                    if (m[i][j] % m[r0][c0]) {
                        for (int k = c0; k < C; ++k) m[r0][k] += m[i][k];
                        divides = false;
                    }
            if (!divides) continue;
            out.push_back(std::labs(m[r0][c0]));
            ++r0;
            break;
        }
    }
    // the normal form above is only diagonal; fix divisibility by gcd/lcm passes
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            long g = std::gcd(out[i], out[j]), l = out[i] / g * out[j];
            out[i] = g;
            out[j] = l;
        }
    return out;
}

struct Homology {
    int rank = 0;
    std::vector<long> torsion;  // factors > 1
};

// First homology from the cellular chain complex of the triangulation.
inline Homology h1(const ideal::Triangulation& tri) {
    using namespace ideal;
    Skeleton sk = skeleton(tri);
    const int V = static_cast<int>(sk.vertices.size()), E = static_cast<int>(sk.edges.size()),
              F = static_cast<int>(sk.faces.size());
    std::vector<std::vector<long>> d1(V, std::vector<long>(E, 0)), d2(E, std::vector<long>(F, 0));
    for (int e = 0; e < E; ++e) {
        const EdgeMember& m = sk.edges[e].members[0];
        int a = kEdgeVertex[m.edge][0], b = kEdgeVertex[m.edge][1];
        if (m.reversed) std::swap(a, b);
        d1[sk.vertex_of[m.tet][b]][e] += 1;
        d1[sk.vertex_of[m.tet][a]][e] -= 1;
    }
    for (int f = 0; f < F; ++f) {
        int t = sk.faces[f].tet, face = sk.faces[f].face;
        std::array<int, 3> v{};
        int k = 0;
        for (int x = 0; x < 4; ++x)
            if (x != face) v[k++] = x;
        // boundary of [v0 v1 v2] = [v1 v2] - [v0 v2] + [v0 v1]
        std::array<std::pair<int, int>, 3> sides{{{v[1], v[2]}, {v[0], v[2]}, {v[0], v[1]}}};
        std::array<int, 3> sign{1, -1, 1};
        for (int i = 0; i < 3; ++i) {
            int te = kEdgeIndex[sides[i].first][sides[i].second];
            int cls = sk.edge_of[t][te];
            int s = sk.edge_rev[t][te] ? -1 : 1;
            d2[cls][f] += sign[i] * s;
        }
    }
    int r1 = static_cast<int>(invariant_factors(d1).size());
    auto inv2 = invariant_factors(d2);
    Homology h;
    h.rank = E - r1 - static_cast<int>(inv2.size());
    for (long x : inv2)
        if (x > 1) h.torsion.push_back(x);
    return h;
}

inline long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

// Matching equations written out directly from the definition.
inline bool matches(const ideal::Triangulation& tri, const ideal::NormalCoords& c) {
    using namespace ideal;
    auto arcs = [&](int t, int f, int x) {
        int n = c.rows[t][x];
        for (int q = 0; q < 3; ++q) {
            // quad q separates {0, q+1}; it cuts corner x in face f when x and f lie in the same pair
            int a = 0, b = q + 1;
            bool same = (x == a && f == b) || (x == b && f == a) || (x != a && x != b && f != a && f != b);
            if (same) n += c.rows[t][4 + q];
        }
        return n;
    };
    for (int t = 0; t < tri.size(); ++t) {
        int kinds = 0;
        for (int q = 0; q < 3; ++q) kinds += c.rows[t][4 + q] > 0;
        if (kinds > 1) return false;
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            for (int x = 0; x < 4; ++x)
                if (x != f && arcs(t, f, x) != arcs(g.tet, g.perm[f], g.perm[x])) return false;
        }
    }
    return true;
}

// Every closed two-tetrahedron gluing (not up to isomorphism), in a fixed order.
inline void for_each_two_tet(const std::function<bool(ideal::Triangulation&)>& visit) {
    using namespace ideal;
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> cur;
    std::function<void(int)> rec = [&](int used) {
        if (used == 255) {
            matchings.push_back(cur);
            return;
        }
        int a = 0;
        while (used >> a & 1) ++a;
        for (int b = a + 1; b < 8; ++b) {
            if (used >> b & 1) continue;
            cur.push_back({a, b});
            rec(used | 1 << a | 1 << b);
            cur.pop_back();
        }
    };
    rec(0);
    static const int P[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& m : matchings) {
        for (int code = 0; code < 1296; ++code) {
            Triangulation T("two");
            T.add_tet("a");
            T.add_tet("b");
            int c = code;
            bool ok = true;
            for (auto [x, y] : m) {
                int t = x / 4, f = x % 4, u = y / 4, g = y % 4;
                int k = c % 6;
                c /= 6;
                int src[3], dst[3], si = 0, di = 0;
                for (int v = 0; v < 4; ++v) {
                    if (v != f) src[si++] = v;
                    if (v != g) dst[di++] = v;
                }
                int img[4];
                img[f] = g;
                for (int i = 0; i < 3; ++i) img[src[i]] = dst[P[k][i]];
                try {
                    T.glue(t, f, u, Perm4(img[0], img[1], img[2], img[3]));
                } catch (const Error&) {
                    ok = false;
                    break;
                }
            }
            if (ok && !visit(T)) return;
        }
    }
}

// Every nonzero coordinate vector with entries <= max_coord, at most one quad
// type per tetrahedron, satisfying the matching equations. Plain backtracking
// over tetrahedra, checking faces glued to already-filled tetrahedra.
inline std::vector<ideal::NormalCoords> brute_surfaces(const ideal::Triangulation& tri, int max_coord) {
    using namespace ideal;
    const int n = tri.size();
    std::vector<NormalRow> rows;
    for (int q = -1; q < 3; ++q) {
        int qmax = q < 0 ? 0 : max_coord;
        for (int qv = q < 0 ? 0 : 1; qv <= qmax; ++qv) {
            int m = max_coord + 1;
            for (int code = 0; code < m * m * m * m; ++code) {
                NormalRow r{};
                int c = code;
                for (int x = 0; x < 4; ++x) r[x] = c % m, c /= m;
                if (q >= 0) r[4 + q] = qv;
                rows.push_back(r);
            }
        }
    }
    auto arcs = [](const NormalRow& r, int f, int x) {
        int k = r[x];
        for (int q = 0; q < 3; ++q) {
            bool same = (x == 0 && f == q + 1) || (x == q + 1 && f == 0) ||
                        (x != 0 && x != q + 1 && f != 0 && f != q + 1);
            if (same) k += r[4 + q];
        }
        return k;
    };
    std::vector<NormalCoords> out;
    NormalCoords cur(n);
    std::function<void(int)> rec = [&](int t) {
        if (t == n) {
            bool zero = true;
            for (const auto& r : cur.rows)
                for (int v : r) zero = zero && v == 0;
            if (!zero) out.push_back(cur);
            return;
        }
        for (const auto& r : rows) {
            cur.rows[t] = r;
            bool ok = true;
            for (int f = 0; f < 4 && ok; ++f) {
                const Gluing& g = tri.gluing(t, f);
                if (!g.glued() || g.tet > t) continue;
                for (int x = 0; x < 4 && ok; ++x)
                    if (x != f && arcs(r, f, x) != arcs(cur.rows[g.tet], g.perm[f], g.perm[x])) ok = false;
            }
            if (ok) rec(t + 1);
        }
        cur.rows[t] = NormalRow{};
    };
    rec(0);
    return out;
}

// Euler characteristic of a closed normal surface straight from its coordinates.
inline int surface_euler(const ideal::Triangulation& tri, const ideal::NormalCoords& c) {
    using namespace ideal;
    Skeleton sk = skeleton(tri);
    int faces = 0, half_edges = 0, verts = 0;
    for (const auto& r : c.rows) {
        for (int x = 0; x < 4; ++x) faces += r[x], half_edges += 3 * r[x];
        for (int q = 0; q < 3; ++q) faces += r[4 + q], half_edges += 4 * r[4 + q];
    }
    for (const auto& e : sk.edges) {
        const EdgeMember& m = e.members[0];
        int a = kEdgeVertex[m.edge][0], b = kEdgeVertex[m.edge][1];
        const NormalRow& r = c.rows[m.tet];
        int k = r[a] + r[b];
        for (int q = 0; q < 3; ++q) {
            // quad q separates {0, q+1} from the other two corners
            auto side = [q](int v) { return v == 0 || v == q + 1; };
            bool split = side(a) != side(b);
            if (split) k += r[4 + q];
        }
        verts += k;
    }
    return verts - half_edges / 2 + faces;
}

// Random relabeling of tetrahedra and corners.
inline ideal::Triangulation shuffle(const ideal::Triangulation& tri, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<int> order(tri.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<ideal::Perm4> corner;
    for (int t = 0; t < tri.size(); ++t) corner.push_back(ideal::Perm4::from_index(static_cast<int>(rng() % 24)));
    return ideal::relabel(tri, order, corner);
}

}  // namespace oracle
