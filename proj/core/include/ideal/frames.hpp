#pragma once

#include <map>
#include <string>
#include <vector>

#include "ideal/links.hpp"

namespace ideal {

struct DirectedArc {
    int arc;
    bool reversed;  // traversed against the arc's intrinsic direction
    friend bool operator==(const DirectedArc&, const DirectedArc&) = default;
};

struct Branch {
    std::vector<DirectedArc> arcs;
    std::vector<int> side;  // per arc, the member (index into Links::members) on the arrow side
    int initial = -1, terminal = -1;  // link vertex ids
    int length() const { return static_cast<int>(arcs.size()); }
};

struct Frame {
    int vertex = -1;          // vertex class of the triangulation
    std::vector<int> arcs;    // sorted arc class ids
    std::vector<Branch> branches;
};

struct FrameReport {
    bool valid = true;
    std::vector<std::string> problems;
};

// Degree of every link vertex touched by the frame's arcs.
std::map<int, int> frame_degrees(const Links& links, const std::vector<int>& arcs);

FrameReport validate_frame(const Links& links, const Frame& f);

// Splits the edge set at branch points; directions follow the default rule.
std::vector<Branch> branch_decompose(const Links& links, const Frame& f);
std::vector<int> branch_points(const Links& links, const Frame& f);

// Side chosen by the right-hand rule at the vertex the directed arc leaves,
// or (at_terminal) at the vertex it arrives at.
int right_hand_side(const Links& links, DirectedArc a, bool at_terminal = false);
// Side of the next arc of a branch, transported through their shared vertex.
int transport_side(const Links& links, DirectedArc from, int side, DirectedArc to);
void assign_transverse(const Links& links, Frame& f);

// Validated frame from an edge set, decomposed and cooriented.
Frame make_frame(const Links& links, int vertex, std::vector<int> arcs);
// Frame from explicit branches; directions are kept, sides recomputed.
Frame make_frame(const Links& links, int vertex, std::vector<std::vector<DirectedArc>> branches);

struct FrameStats {
    int e = 0, b = 0, vb = 0;
};
FrameStats frame_stats(const Links& links, const std::vector<Frame>& frames);

// Chain order of frame arcs per glued face, from the face of the arcs' minimal members.
using FaceOrders = std::map<int, std::vector<int>>;  // face class -> arc ids

struct Complexity {
    int C = 0;
    int crossings = 0;
    FrameStats stats;
    FaceOrders orders;
};

Complexity complexity(const Triangulation& tri, const Links& links, const std::vector<Frame>& frames);

std::vector<Frame> enumerate_frames(const Links& links, int vertex, int max_edges);

// Every combination of one enumerated frame per vertex class.
std::vector<std::vector<Frame>> enumerate_frame_collections(const Links& links, int max_edges);

}  // namespace ideal
