#include "ideal/frames.hpp"

#include <algorithm>
#include <set>

#include "ideal/union_find.hpp"

namespace ideal {

std::map<int, int> frame_degrees(const Links& links, const std::vector<int>& arcs) {
    std::map<int, int> deg;
    for (int a : arcs) {
        ++deg[links.arcs[a].start];
        ++deg[links.arcs[a].end];
    }
    return deg;
}

namespace {

int link_end(const Links& links, DirectedArc a, bool terminal) {
    bool start = a.reversed == terminal;
    return start ? links.arcs[a.arc].start : links.arcs[a.arc].end;
}

// Which end (0 start, 1 end) of the arc class a directed arc leaves from.
int leaving_end(DirectedArc a) { return a.reversed ? 1 : 0; }
int arriving_end(DirectedArc a) { return a.reversed ? 0 : 1; }

bool spoke_is(const Links& links, int member, int other, int arc, int end) {
    return member >= 0 && links.member_class[member] == arc && links.member_end(member, other) == end;
}

}  // namespace

FrameReport validate_frame(const Links& links, const Frame& f) {
    FrameReport rep;
    auto problem = [&](std::string s) {
        rep.valid = false;
        rep.problems.push_back(std::move(s));
    };
    if (f.vertex < 0 || f.vertex >= static_cast<int>(links.sk.vertices.size())) throw Error("frame vertex out of range");
    std::set<int> arcs(f.arcs.begin(), f.arcs.end());
    if (arcs.size() != f.arcs.size()) problem("repeated arc in edge set");
    for (int a : arcs) {
        if (a < 0 || a >= static_cast<int>(links.arcs.size()) || links.arcs[a].vertex != f.vertex)
            throw Error("arc not in the link of this vertex");
    }
    VertexLink vl = vertex_link(links, f.vertex);
    if (!vl.closed) {
        problem("link is not closed");
        return rep;
    }
    if (arcs.empty()) {
        problem("empty edge set");
        return rep;
    }
    auto deg = frame_degrees(links, f.arcs);
    for (auto [v, d] : deg)
        if (d == 1) problem("leaf at link vertex " + std::to_string(v));

    // connectivity of the subgraph
    {
        UnionFind uf(static_cast<int>(links.lverts.size()));
        for (int a : arcs) uf.unite(links.arcs[a].start, links.arcs[a].end);
        int root = uf.find(deg.begin()->first);
        for (auto [v, d] : deg)
            if (uf.find(v) != root) {
                problem("edge set is not connected");
                break;
            }
    }
    // complement: triangles joined across non-frame arcs
    {
        std::map<std::pair<int, int>, int> idx;
        for (auto tc : vl.triangles) idx.emplace(tc, static_cast<int>(idx.size()));
        UnionFind uf(static_cast<int>(idx.size()));
        int cut_edges = 0;
        for (int a : vl.arcs) {
            if (arcs.count(a)) continue;
            ++cut_edges;
            const ArcClass& ac = links.arcs[a];
            uf.unite(idx.at({ac.members[0].tet, ac.members[0].corner}), idx.at({ac.members[1].tet, ac.members[1].corner}));
        }
        std::set<int> roots;
        for (int i = 0; i < static_cast<int>(idx.size()); ++i) roots.insert(uf.find(i));
        int free_vertices = static_cast<int>(vl.vertices.size()) - static_cast<int>(deg.size());
        int chi = static_cast<int>(vl.triangles.size()) - cut_edges + free_vertices;
        if (roots.size() != 1) problem("complement has " + std::to_string(roots.size()) + " components");
        else if (chi != 1) problem("complement is not a disk (euler characteristic " + std::to_string(chi) + ")");
    }
    // branches, when present
    if (!f.branches.empty()) {
        std::multiset<int> used;
        for (const Branch& b : f.branches) {
            if (b.arcs.empty()) {
                problem("empty branch");
                continue;
            }
            for (std::size_t j = 0; j < b.arcs.size(); ++j) {
                used.insert(b.arcs[j].arc);
                if (j + 1 < b.arcs.size() &&
                    link_end(links, b.arcs[j], true) != link_end(links, b.arcs[j + 1], false))
                    problem("branch endpoints do not chain");
                if (j > 0 && deg[link_end(links, b.arcs[j], false)] != 2)
                    problem("branch passes through a branch point");
            }
            if (deg[link_end(links, b.arcs.front(), false)] < 3 || deg[link_end(links, b.arcs.back(), true)] < 3)
                problem("branch does not end at branch points");
        }
        if (std::vector<int>(used.begin(), used.end()) != std::vector<int>(arcs.begin(), arcs.end()))
            problem("branches do not partition the edge set");
    }
    return rep;
}

std::vector<int> branch_points(const Links& links, const Frame& f) {
    std::vector<int> out;
    for (auto [v, d] : frame_degrees(links, f.arcs))
        if (d >= 3) out.push_back(v);
    return out;
}

std::vector<Branch> branch_decompose(const Links& links, const Frame& f) {
    FrameReport rep = validate_frame(links, Frame{f.vertex, f.arcs, {}});
    if (!rep.valid) throw Error("invalid frame: " + rep.problems.front());
    auto deg = frame_degrees(links, f.arcs);
    // half-edges at each vertex: (arc, end)
    std::map<int, std::vector<std::pair<int, int>>> inc;
    for (int a : f.arcs) {
        inc[links.arcs[a].start].emplace_back(a, 0);
        inc[links.arcs[a].end].emplace_back(a, 1);
    }
    for (auto& [v, list] : inc) std::sort(list.begin(), list.end());
    std::set<int> used;
    std::vector<Branch> out;
    for (auto& [w, list] : inc) {
        if (deg[w] < 3) continue;
        for (auto [a0, e0] : list) {
            if (used.count(a0)) continue;
            Branch b;
            int a = a0, e = e0;
            while (true) {
                used.insert(a);
                DirectedArc da{a, e == 1};
                b.arcs.push_back(da);
                int next = link_end(links, da, true);
                if (deg[next] >= 3) break;
                // degree-2 vertex: continue along the other half-edge
                int arrive = arriving_end(da);
                std::pair<int, int> nxt{-1, -1};
                for (auto h : inc[next])
                    if (!(h.first == a && h.second == arrive)) nxt = h;
                a = nxt.first;
                e = nxt.second;
            }
            out.push_back(std::move(b));
        }
    }
    if (used.size() != f.arcs.size()) throw Error("frame has a component without branch points");
    for (Branch& b : out) {
        Branch r;
        for (auto it = b.arcs.rbegin(); it != b.arcs.rend(); ++it) r.arcs.push_back({it->arc, !it->reversed});
        int bi = link_end(links, b.arcs.front(), false), bt = link_end(links, b.arcs.back(), true);
        auto key = [](const Branch& x) { return std::make_pair(x.arcs.front().arc, x.arcs.front().reversed); };
        bool flip = bt < bi || (bt == bi && key(r) < key(b));
        if (flip) b = std::move(r);
        b.initial = link_end(links, b.arcs.front(), false);
        b.terminal = link_end(links, b.arcs.back(), true);
    }
    std::sort(out.begin(), out.end(), [](const Branch& x, const Branch& y) {
        return std::make_pair(x.initial, x.arcs.front().arc) < std::make_pair(y.initial, y.arcs.front().arc);
    });
    return out;
}

int right_hand_side(const Links& links, DirectedArc a, bool at_terminal) {
    int w = link_end(links, a, at_terminal);
    const auto& fan = links.lverts[w].fan;
    if (!at_terminal) {
        int end = leaving_end(a);
        for (const FanEntry& e : fan)
            if (spoke_is(links, e.in_member, e.other, a.arc, end)) return e.in_member;
    } else {
        int end = arriving_end(a);
        for (const FanEntry& e : fan)
            if (spoke_is(links, e.out_member, e.other, a.arc, end)) return e.out_member;
    }
    throw Error("arc not found in fan");
}

int transport_side(const Links& links, DirectedArc from, int side, DirectedArc to) {
    int w = link_end(links, from, true);
    if (link_end(links, to, false) != w) throw Error("arcs do not share a vertex");
    const auto& fan = links.lverts[w].fan;
    const int k = static_cast<int>(fan.size());
    int arr = arriving_end(from), lv = leaving_end(to);
    for (int i = 0; i < k; ++i) {
        const FanEntry& cur = fan[i];
        const FanEntry& nxt = fan[(i + 1) % k];
        if (!spoke_is(links, cur.out_member, cur.other, from.arc, arr)) continue;
        if (side == nxt.in_member) {
            for (int s = 1; s <= k; ++s) {
                const FanEntry& e = fan[(i + s) % k];
                if (spoke_is(links, e.out_member, e.other, to.arc, lv)) return e.out_member;
            }
        } else if (side == cur.out_member) {
            for (int s = 0; s < k; ++s) {
                const FanEntry& e = fan[((i - s) % k + k) % k];
                if (spoke_is(links, e.in_member, e.other, to.arc, lv)) return e.in_member;
            }
        }
    }
    throw Error("side transport failed");
}

void assign_transverse(const Links& links, Frame& f) {
    for (Branch& b : f.branches) {
        b.side.assign(b.arcs.size(), -1);
        b.side[0] = right_hand_side(links, b.arcs[0]);
        for (std::size_t j = 1; j < b.arcs.size(); ++j)
            b.side[j] = transport_side(links, b.arcs[j - 1], b.side[j - 1], b.arcs[j]);
    }
}

Frame make_frame(const Links& links, int vertex, std::vector<int> arcs) {
    std::sort(arcs.begin(), arcs.end());
    Frame f{vertex, arcs, {}};
    f.branches = branch_decompose(links, f);
    assign_transverse(links, f);
    return f;
}

Frame make_frame(const Links& links, int vertex, std::vector<std::vector<DirectedArc>> branches) {
    Frame f;
    f.vertex = vertex;
    for (auto& br : branches) {
        Branch b;
        b.arcs = std::move(br);
        for (auto& da : b.arcs) f.arcs.push_back(da.arc);
        if (!b.arcs.empty()) {
            b.initial = link_end(links, b.arcs.front(), false);
            b.terminal = link_end(links, b.arcs.back(), true);
        }
        f.branches.push_back(std::move(b));
    }
    std::sort(f.arcs.begin(), f.arcs.end());
    FrameReport rep = validate_frame(links, f);
    if (!rep.valid) throw Error("invalid frame: " + rep.problems.front());
    assign_transverse(links, f);
    return f;
}

FrameStats frame_stats(const Links& links, const std::vector<Frame>& frames) {
    FrameStats s;
    for (const Frame& f : frames) {
        s.e += static_cast<int>(f.arcs.size());
        s.b += static_cast<int>(f.branches.size());
        s.vb += static_cast<int>(branch_points(links, f).size());
    }
    return s;
}

std::vector<Frame> enumerate_frames(const Links& links, int vertex, int max_edges) {
    std::vector<Frame> out;
    VertexLink vl = vertex_link(links, vertex);
    if (!vl.closed || max_edges <= 0) return out;
    const int m = static_cast<int>(vl.arcs.size());
    // E - V = 2g - 1 (or k - 1 for k cross-caps) fixes the edge count given the vertices
    std::vector<int> pick;
    std::vector<std::vector<int>> subsets;
    auto rec = [&](auto&& self, int from) -> void {
        if (!pick.empty()) {
            std::vector<int> arcs;
            for (int i : pick) arcs.push_back(vl.arcs[i]);
            subsets.push_back(arcs);
        }
        if (static_cast<int>(pick.size()) == max_edges) return;
        for (int i = from; i < m; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    const int target = 1 - vl.euler();  // arcs - vertices for any one-disk spine
    for (auto& arcs : subsets) {
        auto deg = frame_degrees(links, arcs);
        if (static_cast<int>(arcs.size()) - static_cast<int>(deg.size()) != target) continue;
        Frame f{vertex, arcs, {}};
        if (!validate_frame(links, f).valid) continue;
        out.push_back(make_frame(links, vertex, arcs));
    }
    std::sort(out.begin(), out.end(), [](const Frame& a, const Frame& b) {
        if (a.arcs.size() != b.arcs.size()) return a.arcs.size() < b.arcs.size();
        return a.arcs < b.arcs;
    });
    return out;
}

std::vector<std::vector<Frame>> enumerate_frame_collections(const Links& links, int max_edges) {
    std::vector<std::vector<Frame>> per;
    for (int v = 0; v < static_cast<int>(links.sk.vertices.size()); ++v) per.push_back(enumerate_frames(links, v, max_edges));
    std::vector<std::vector<Frame>> out;
    for (const auto& p : per)
        if (p.empty()) return out;
    std::vector<std::size_t> idx(per.size(), 0);
    while (true) {
        std::vector<Frame> col;
        for (std::size_t i = 0; i < per.size(); ++i) col.push_back(per[i][idx[i]]);
        out.push_back(std::move(col));
        std::size_t k = per.size();
        while (k > 0) {
            --k;
            if (++idx[k] < per[k].size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (per.empty()) return out;
    }
}

}  // namespace ideal
