#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ideal/perm.hpp"

namespace ideal {

// Thrown for malformed or structurally unusable input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Faces are indexed by the corner they miss, edges 0..5 as 01 02 03 12 13 23.
inline constexpr int kEdgeVertex[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
inline constexpr int kEdgeIndex[4][4] = {
    {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
inline constexpr int kFaceVertex[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};

std::string face_name(int f);  // "123" for face 0, etc.

struct Gluing {
    int tet = -1;  // -1 when the face is unglued
    Perm4 perm;    // corners of this tetrahedron -> corners of `tet`
    bool glued() const { return tet >= 0; }
};

class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    int size() const { return static_cast<int>(labels_.size()); }
    int add_tet(std::string label);
    const std::string& label(int t) const { return labels_.at(t); }
    const std::vector<std::string>& labels() const { return labels_; }
    int find(std::string_view label) const;  // -1 when absent
    void set_label(int t, std::string label) { labels_.at(t) = std::move(label); }

    const Gluing& gluing(int t, int f) const { return glue_.at(t)[f]; }
    bool boundary(int t, int f) const { return !glue_.at(t)[f].glued(); }

    // Glues face f of t to face p[f] of u, storing both directions.
    void glue(int t, int f, int u, Perm4 p);
    // (t)(abc) <-> (u)(a'b'c') in the bracket notation.
    void glue(int t, std::string_view abc, int u, std::string_view img);
    void unglue(int t, int f);
    // Writes a single direction only; used to build deliberately broken data.
    void set_gluing_raw(int t, int f, Gluing g) { glue_.at(t)[f] = g; }

    int boundary_face_count() const;
    bool closed() const { return boundary_face_count() == 0; }

    friend bool operator==(const Triangulation&, const Triangulation&);

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::array<Gluing, 4>> glue_;
};

bool operator==(const Gluing& a, const Gluing& b);

// Every invariant violation as a readable line; empty means valid.
std::vector<std::string> validate(const Triangulation& tri);

// Renames tetrahedra and relabels corners: tet t becomes tet order[t] with
// corner map corner[t]. Used to build relabeled copies for testing.
Triangulation relabel(const Triangulation& tri, const std::vector<int>& order,
                      const std::vector<Perm4>& corner);

}  // namespace ideal
