#include "ideal/isomorphism.hpp"

#include <deque>

#include "ideal/skeleton.hpp"

namespace ideal {

bool verify_iso(const Triangulation& a, const Triangulation& b, const IsoMap& m) {
    const int n = a.size();
    if (b.size() != n || static_cast<int>(m.tet.size()) != n || static_cast<int>(m.corner.size()) != n)
        return false;
    std::vector<char> hit(n, 0);
    for (int t = 0; t < n; ++t) {
        if (m.tet[t] < 0 || m.tet[t] >= n || hit[m.tet[t]]) return false;
        hit[m.tet[t]] = 1;
    }
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = a.gluing(t, f);
            const Gluing& h = b.gluing(m.tet[t], m.corner[t][f]);
            if (g.glued() != h.glued()) return false;
            if (!g.glued()) continue;
            if (h.tet != m.tet[g.tet]) return false;
            if (h.perm * m.corner[t] != m.corner[g.tet] * g.perm) return false;
        }
    }
    return true;
}

namespace {

// Extends the partial map from a seed by propagating through gluings.
bool propagate(const Triangulation& a, const Triangulation& b, int s, int target, Perm4 p,
               IsoMap& m, std::vector<char>& used) {
    std::vector<int> touched;
    auto fail = [&]() {
        for (int t : touched) {
            used[m.tet[t]] = 0;
            m.tet[t] = -1;
        }
        return false;
    };
    std::deque<int> queue;
    m.tet[s] = target;
    m.corner[s] = p;
    used[target] = 1;
    touched.push_back(s);
    queue.push_back(s);
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = a.gluing(t, f);
            const Gluing& h = b.gluing(m.tet[t], m.corner[t][f]);
            if (g.glued() != h.glued()) return fail();
            if (!g.glued()) continue;
            Perm4 want = h.perm * m.corner[t] * g.perm.inverse();
            if (m.tet[g.tet] >= 0) {
                if (m.tet[g.tet] != h.tet || m.corner[g.tet] != want) return fail();
                continue;
            }
            if (used[h.tet]) return fail();
            m.tet[g.tet] = h.tet;
            m.corner[g.tet] = want;
            used[h.tet] = 1;
            touched.push_back(g.tet);
            queue.push_back(g.tet);
        }
    }
    return true;
}

bool search(const Triangulation& a, const Triangulation& b, const std::vector<std::vector<int>>& comps,
            std::size_t ci, IsoMap& m, std::vector<char>& used) {
    if (ci == comps.size()) return true;
    int s = comps[ci].front();
    for (int target = 0; target < b.size(); ++target) {
        if (used[target]) continue;
        for (int k = 0; k < 24; ++k) {
            IsoMap saved = m;
            std::vector<char> saved_used = used;
            if (propagate(a, b, s, target, Perm4::from_index(k), m, used)) {
                if (search(a, b, comps, ci + 1, m, used)) return true;
            }
            m = std::move(saved);
            used = std::move(saved_used);
        }
    }
    return false;
}

}  // namespace

std::optional<IsoMap> isomorphic(const Triangulation& a, const Triangulation& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.boundary_face_count() != b.boundary_face_count()) return std::nullopt;
    IsoMap m;
    m.tet.assign(a.size(), -1);
    m.corner.assign(a.size(), Perm4());
    std::vector<char> used(b.size(), 0);
    auto comps = components(a);
    if (!search(a, b, comps, 0, m, used)) return std::nullopt;
    if (!verify_iso(a, b, m)) return std::nullopt;
    return m;
}

std::string describe(const Triangulation& a, const Triangulation& b, const IsoMap& m) {
    std::string s;
    for (int t = 0; t < a.size(); ++t)
        s += a.label(t) + " -> " + b.label(m.tet[t]) + " " + m.corner[t].str() + "\n";
    return s;
}

}  // namespace ideal
