#pragma once

#include <array>
#include <string>
#include <vector>

#include "ideal/triangulation.hpp"

namespace ideal {

// Quad type q separates {0, q+1} from the other two corners.
int quad_type(int a, int b);
inline constexpr int kQuadPair[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};

// Per tetrahedron: triangles at corners 0..3, then quads of types 0..2.
using NormalRow = std::array<int, 7>;

struct NormalCoords {
    std::vector<NormalRow> rows;

    NormalCoords() = default;
    explicit NormalCoords(int tets) : rows(tets, NormalRow{}) {}
    int size() const { return static_cast<int>(rows.size()); }
    int& tri(int t, int corner) { return rows[t][corner]; }
    int tri(int t, int corner) const { return rows[t][corner]; }
    int& quad(int t, int q) { return rows[t][4 + q]; }
    int quad(int t, int q) const { return rows[t][4 + q]; }
    // Number of arcs cutting off corner x in face f.
    int arcs(int t, int f, int x) const { return tri(t, x) + quad(t, quad_type(x, f)); }
    // The non-zero quad type of t, or -1.
    int quad_kind(int t) const;
    NormalCoords operator+(const NormalCoords& o) const;
    friend bool operator==(const NormalCoords&, const NormalCoords&) = default;
    friend auto operator<=>(const NormalCoords& a, const NormalCoords& b) { return a.rows <=> b.rows; }
};

struct MatchingReport {
    bool admissible = true;
    std::vector<std::string> violations;
};

MatchingReport check_matching(const Triangulation& tri, const NormalCoords& c);

// Coordinates of the union of all vertex links, or the link of one vertex class.
NormalCoords vertex_link_coords(const Triangulation& tri);
NormalCoords vertex_link_coords(const Triangulation& tri, int vertex_class);

enum class DiskKind { Triangle, Quad };

struct NormalDisk {
    int tet;
    DiskKind kind;
    int type;   // corner for triangles, quad type for quads
    int layer;  // distance from the corner, or position from the pair containing corner 0
    int component = -1;
};

struct SurfaceComponent {
    int disks = 0;
    int vertices = 0, edges = 0;
    int boundary_edges = 0;
    bool orientable = true;
    int euler = 0;
    NormalCoords coords;
};

struct SurfaceReport {
    std::vector<NormalDisk> disks;
    std::vector<SurfaceComponent> components;
    int euler() const;
    bool connected() const { return components.size() == 1; }
    bool empty() const { return components.empty(); }
    NormalCoords coords(int tets) const;
};

SurfaceReport surface_from_coords(const Triangulation& tri, const NormalCoords& c);

struct SmallSurface {
    NormalCoords coords;
    SurfaceReport report;
};

std::vector<SmallSurface> enumerate_small_surfaces(const Triangulation& tri, int max_coord);

}  // namespace ideal
