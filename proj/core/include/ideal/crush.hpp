#pragma once

#include <string>
#include <vector>

#include "ideal/normal.hpp"
#include "ideal/triangulation.hpp"

namespace ideal {

enum class PieceType { Tip, TruncatedTet, Prism, TriBlock, QuadBlock };

std::string piece_type_name(PieceType t);

// One component of (tetrahedron minus S).
struct Piece {
    int tet = -1;
    PieceType type = PieceType::Tip;
    int a = -1, b = -1;  // tip/tri block: corner, layer; prism: edge corners a < b; quad block: -, index
    bool has_vertex = false;
    bool on_boundary = false;  // meets a boundary face of the triangulation
    int component = -1;
    bool in_x = false;
};

struct PrismChain {
    std::vector<int> prisms;  // piece ids in traversal order
    bool closed = false;
    int from_tet = -1, from_face = -1, to_tet = -1, to_face = -1;  // truncated tets at the ends
    Perm4 perm;  // corners of from_tet -> corners of to_tet
};

struct ProductComponent {
    std::vector<int> blocks;
    int vertices = 0, edges = 0, faces = 0;
    int boundary_edges = 0;
    int euler() const { return vertices - edges + faces; }
    // horizontal surface is a disk
    bool trivial() const { return euler() == 1 && boundary_edges > 0; }
};

struct CellDecomposition {
    NormalCoords surface;
    std::vector<Piece> pieces;
    std::vector<std::vector<int>> tet_pieces;
    int x_component = -1;
    std::vector<PrismChain> chains;
    std::vector<ProductComponent> products;

    int count(PieceType t) const;  // pieces of X only
    std::vector<int> chain_lengths() const;  // open chains, sorted
};

struct ObstructionReport {
    bool no_truncated_tetrahedra = false;
    bool nontrivial_product_region = false;
    std::vector<int> prism_cycles;  // chain ids
    bool clear() const { return !no_truncated_tetrahedra && !nontrivial_product_region && prism_cycles.empty(); }
    std::string text() const;
};

class ObstructionError : public Error {
public:
    explicit ObstructionError(ObstructionReport r) : Error("crushing obstructed: " + r.text()), report(std::move(r)) {}
    ObstructionReport report;
};

// Component roots (piece ids) of the complement sides free of vertices and boundary.
std::vector<int> vertex_free_sides(const Triangulation& tri, const NormalCoords& s);

// side_hint: a piece id inside the wanted side; -1 to pick the unique vertex-free side.
CellDecomposition cell_decomposition(const Triangulation& tri, const NormalCoords& s, int side_hint = -1);
ObstructionReport obstructions(const CellDecomposition& cd);

Triangulation crush(const Triangulation& tri, const CellDecomposition& cd);
Triangulation crush(const Triangulation& tri, const NormalCoords& s, int side_hint = -1);

// Frontier of a small neighborhood of the boundary, one entry per boundary component.
std::vector<NormalCoords> boundary_linking_components(const Triangulation& tri);
NormalCoords boundary_linking_coords(const Triangulation& tri);

Triangulation crush_along_boundary(const Triangulation& tri);

std::string describe(const CellDecomposition& cd, const Triangulation& tri);

}  // namespace ideal
