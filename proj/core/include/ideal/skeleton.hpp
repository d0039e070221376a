#pragma once

#include <optional>
#include <vector>

#include "ideal/triangulation.hpp"

namespace ideal {

struct EdgeMember {
    int tet;
    int edge;      // 0..5
    bool reversed;  // tet edge (lo,hi) runs against the class orientation
};

struct EdgeClass {
    std::vector<EdgeMember> members;  // members[0] is the representative
    bool self_reversed = false;       // some member is identified with itself reversed
    bool boundary = false;
    int degree() const { return static_cast<int>(members.size()); }
};

struct VertexClass {
    std::vector<std::pair<int, int>> members;  // (tet, corner), sorted
    bool boundary = false;
};

struct FaceClass {
    int tet, face;            // representative
    int other_tet = -1;       // -1 for boundary faces
    int other_face = -1;
};

struct Skeleton {
    std::vector<VertexClass> vertices;
    std::vector<EdgeClass> edges;
    std::vector<FaceClass> faces;
    std::vector<std::array<int, 4>> vertex_of;  // [tet][corner] -> class
    std::vector<std::array<int, 6>> edge_of;    // [tet][edge] -> class
    std::vector<std::array<int, 4>> face_of;    // [tet][face] -> class
    std::vector<std::array<bool, 6>> edge_rev;  // orientation flag per tet edge
};

Skeleton skeleton(const Triangulation& tri);

int euler_characteristic(const Triangulation& tri);
int euler_characteristic(const Triangulation& tri, const Skeleton& sk);

// Connected components of tetrahedra under face gluings, each sorted.
std::vector<std::vector<int>> components(const Triangulation& tri);

struct Orientability {
    bool orientable = true;
    std::vector<int> sign;                  // per tet, +1/-1; meaningful per component
    std::vector<bool> component_orientable;  // in components() order
};

Orientability orientability(const Triangulation& tri);

struct BoundarySurface {
    std::vector<std::pair<int, int>> faces;  // (tet, face)
    int vertices = 0;
    int edges = 0;
    bool orientable = true;
    int euler() const { return vertices - edges + static_cast<int>(faces.size()); }
    // Orientable genus, or the number of cross-caps when non-orientable.
    int genus() const { return orientable ? (2 - euler()) / 2 : 2 - euler(); }
    std::vector<int> vertex_classes;
    std::vector<int> edge_classes;
};

std::vector<BoundarySurface> boundary_complex(const Triangulation& tri);
std::vector<BoundarySurface> boundary_complex(const Triangulation& tri, const Skeleton& sk);

}  // namespace ideal
