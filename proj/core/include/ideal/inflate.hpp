#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ideal/frames.hpp"
#include "ideal/links.hpp"
#include "ideal/normal.hpp"
#include "ideal/triangulation.hpp"

namespace ideal {

// One frame arc inserted into a face chain. Roles are corners of the face
// on the side of the arc's minimal member.
struct ChainSlot {
    int arc = -1;
    int corner = -1, start = -1, finish = -1;  // roles: cut-off corner, start edge, end edge
    int near = 0;  // copy of the corner (0 or 1) facing the minimal-member side
};

struct FaceChain {
    int face_class = -1;
    int tet = -1, face = -1;            // side of the minimal arc members
    int other_tet = -1, other_face = -1;
    Perm4 perm;                          // gluing tet -> other_tet
    std::vector<ChainSlot> slots;
};

// A side of a configuration polygon: the free face of a frame-arc
// tetrahedron, with corners in polygon order.
struct PolygonEntry {
    int mark = 0;  // +1 arc at the recording end, -1 at the far end
    int arc = -1;
    bool at_initial = false;  // the arc's initial end lies on the edge
    int side = -1;            // arrow-side member
    int from = -1, to = -1, apex = -1;
};

struct ConfigPolygon {
    int edge = -1;
    std::vector<PolygonEntry> entries;
    std::vector<int> marks() const;
};

enum class PieceKind { Generic, Crossing, Branch };

// A piece side refers to a polygon entry (ref >= 0) or to a chord (ref = -1 - id).
struct PieceSide {
    int ref;
    bool reversed;
    int mark;
};

struct ConfigPiece {
    PieceKind kind;
    std::vector<PieceSide> sides;  // cyclic, in piece order
    int added() const {
        if (kind == PieceKind::Crossing) return 1;
        if (kind == PieceKind::Branch) return static_cast<int>(sides.size()) - 2;
        return 0;
    }
};

struct Decomposition {
    std::vector<ConfigPiece> pieces;
    int chords = 0;
    int crossings = 0;
    int added = 0;
};

Decomposition decompose_polygon(const std::vector<int>& marks);

// Triangles of a polygon with vertices 1..k.
using PolygonPlan = std::vector<std::array<int, 3>>;
PolygonPlan fan_plan(int k, int apex = 1);
std::vector<PolygonPlan> polygon_plans(int k);
bool valid_plan(int k, const PolygonPlan& plan);

std::vector<FaceChain> face_chains(const Triangulation& tri, const Links& links, const std::vector<Frame>& frames,
                                   const FaceOrders& orders);
std::vector<ConfigPolygon> config_polygons(const Triangulation& tri, const Links& links,
                                           const std::vector<Frame>& frames, const FaceOrders& orders);

struct InflateOptions {
    bool use_orders = false;
    FaceOrders orders;  // used when use_orders is set
    // (edge class, branch piece ordinal at that edge) -> plan
    std::map<std::pair<int, int>, PolygonPlan> plans;
};

enum class Origin { Original, FrameArc, Crossing, Branch };

struct Provenance {
    Origin kind;
    int ref;   // original tet, arc id, or edge class
    int edge;  // edge class for crossings and branches, else -1
};

struct InflationResult {
    Triangulation tri;
    std::vector<Provenance> provenance;
    std::vector<NormalCoords> boundary_coords;  // per vertex class of the input
    FrameStats stats;
    int crossings = 0;
    int C = 0;
    int added = 0;
    FaceOrders orders;
    std::vector<ConfigPolygon> polygons;
    std::vector<Decomposition> decompositions;
};

// Work complex used while inflating; exposed for testing the stages.
struct InflationWork {
    Triangulation tri;
    std::vector<Provenance> provenance;
    std::map<int, int> arc_tet;  // arc id -> output tet
    std::vector<NormalCoords> coords;
};

// Replaces the gluing across one face by its chain of arc tetrahedra.
void inflate_face(InflationWork& work, const FaceChain& chain);
// Fills the configuration polygon at one edge; returns the decomposition used.
Decomposition inflate_edge(InflationWork& work, const ConfigPolygon& poly, int edge, int recording_vertex,
                           int far_vertex, const std::map<int, PolygonPlan>& plans);

InflationResult inflate(const Triangulation& tri, const std::vector<Frame>& frames,
                        const InflateOptions& options = {});
InflationResult inflate(const Triangulation& tri, const Links& links, const std::vector<Frame>& frames,
                        const InflateOptions& options = {});

std::vector<NormalCoords> boundary_linking(const InflationResult& result);

std::string provenance_report(const InflationResult& result, const Links& links);

}  // namespace ideal
