#include "ideal/triangulation.hpp"

#include <set>

namespace ideal {

std::string face_name(int f) {
    std::string s;
    for (int v : kFaceVertex[f]) s += static_cast<char>('0' + v);
    return s;
}

int Triangulation::add_tet(std::string label) {
    labels_.push_back(std::move(label));
    glue_.push_back({});
    return size() - 1;
}

int Triangulation::find(std::string_view label) const {
    for (int t = 0; t < size(); ++t)
        if (labels_[t] == label) return t;
    return -1;
}

void Triangulation::glue(int t, int f, int u, Perm4 p) {
    if (t < 0 || t >= size() || u < 0 || u >= size()) throw Error("glue: tetrahedron out of range");
    int g = p[f];
    if (glue_.at(t)[f].glued() || glue_.at(u)[g].glued())
        throw Error("glue: face " + labels_[t] + "(" + face_name(f) + ") or " + labels_[u] + "(" +
                    face_name(g) + ") already glued");
    if (t == u && f == g) {
        if (p.is_identity() || p != p.inverse()) throw Error("glue: bad self-gluing of a face");
        glue_[t][f] = Gluing{t, p};
        return;
    }
    glue_[t][f] = Gluing{u, p};
    glue_[u][g] = Gluing{t, p.inverse()};
}

void Triangulation::glue(int t, std::string_view abc, int u, std::string_view img) {
    glue(t, missing_corner(abc), u, face_perm(abc, img));
}

void Triangulation::unglue(int t, int f) {
    Gluing g = glue_.at(t)[f];
    if (!g.glued()) return;
    glue_[t][f] = Gluing{};
    Gluing& back = glue_.at(g.tet)[g.perm[f]];
    if (back.tet == t) back = Gluing{};
}

int Triangulation::boundary_face_count() const {
    int n = 0;
    for (const auto& row : glue_)
        for (const auto& g : row)
            if (!g.glued()) ++n;
    return n;
}

bool operator==(const Gluing& a, const Gluing& b) {
    if (a.tet != b.tet) return false;
    return a.tet < 0 || a.perm == b.perm;
}

bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.name_ == b.name_ && a.labels_ == b.labels_ && a.glue_ == b.glue_;
}

std::vector<std::string> validate(const Triangulation& tri) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (int t = 0; t < tri.size(); ++t) {
        const std::string& l = tri.label(t);
        if (l.empty()) out.push_back("tetrahedron " + std::to_string(t) + " has an empty label");
        if (!seen.insert(l).second) out.push_back("duplicate tetrahedron label " + l);
    }
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            std::string here = tri.label(t) + "(" + face_name(f) + ")";
            if (g.tet >= tri.size()) {
                out.push_back(here + " glued to a missing tetrahedron");
                continue;
            }
            int h = g.perm[f];
            if (g.tet == t && h == f) {
                if (g.perm.is_identity())
                    out.push_back(here + " glued to itself by the identity");
                else if (g.perm != g.perm.inverse())
                    out.push_back("involution violated at " + here + ": self-gluing is not an involution");
                continue;
            }
            const Gluing& back = tri.gluing(g.tet, h);
            if (!back.glued() || back.tet != t || back.perm != g.perm.inverse())
                out.push_back("involution violated at " + here + ": reverse entry of " +
                              tri.label(g.tet) + "(" + face_name(h) + ") missing or different");
        }
    }
    return out;
}

Triangulation relabel(const Triangulation& tri, const std::vector<int>& order,
                      const std::vector<Perm4>& corner) {
    int n = tri.size();
    if (static_cast<int>(order.size()) != n || static_cast<int>(corner.size()) != n)
        throw Error("relabel: size mismatch");
    std::vector<int> inv(n, -1);
    for (int t = 0; t < n; ++t) inv.at(order[t]) = t;
    Triangulation out(tri.name());
    for (int s = 0; s < n; ++s) out.add_tet(tri.label(inv[s]));
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            // new corner c of order[t] is old corner corner[t]^-1[c]
            Perm4 p = corner[g.tet] * g.perm * corner[t].inverse();
            int nf = corner[t][f];
            if (out.gluing(order[t], nf).glued()) continue;
            out.glue(order[t], nf, order[g.tet], p);
        }
    }
    return out;
}

}  // namespace ideal
