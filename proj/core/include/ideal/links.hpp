#pragma once

#include <string>
#include <vector>

#include "ideal/skeleton.hpp"
#include "ideal/triangulation.hpp"

namespace ideal {

// The normal arc in face `face` of `tet` cutting off `corner`.
struct ArcMember {
    int tet, face, corner;
    friend bool operator==(const ArcMember&, const ArcMember&) = default;
};

struct ArcClass {
    std::vector<ArcMember> members;  // members[0] is the minimal representative
    std::vector<bool> reversed;      // member-local direction runs against the class
    int start = -1, end = -1;        // link vertex ids in the class direction
    int vertex = -1;                 // owning vertex class
    std::string name;
    bool boundary() const { return members.size() == 1; }
};

// One corner of a link triangle at a link vertex, with the two arc
// members through that corner in fan order.
struct FanEntry {
    int tet, corner;   // link triangle
    int other;         // the tet edge is (corner, other)
    int in_member;     // index into Links::members, -1 at a boundary end
    int out_member;
};

struct LinkVertexClass {
    std::vector<std::array<int, 3>> ends;  // (tet, a, b): end of edge ab at a
    int vertex = -1;
    int edge = -1;           // edge class of the triangulation
    std::vector<FanEntry> fan;  // in positive rotation order
    bool closed = true;
};

// All link data of a triangulation at once.
struct Links {
    std::vector<ArcMember> members;     // every (tet, face, corner) with corner in face
    std::vector<int> member_class;      // member -> arc class
    std::vector<int> member_partner;    // member -> glued member or -1
    std::vector<ArcClass> arcs;
    std::vector<LinkVertexClass> lverts;
    std::vector<int> triangle_sign;     // per (tet*4+corner), orientation of the link triangle
    Skeleton sk;

    int member_index(int tet, int face, int corner) const;
    int find_arc(const std::string& name) const;  // -1 when absent
    // Link vertex at one end of an arc class (0 = start, 1 = end).
    int arc_end(int arc, int which) const { return which ? arcs[arc].end : arcs[arc].start; }
    // Which end of the class a member touches at edge (corner, other).
    int member_end(int member, int other) const;
};

Links build_links(const Triangulation& tri);

std::string arc_name(int tet, int face, int corner);

struct VertexLink {
    int vertex = -1;
    std::vector<std::pair<int, int>> triangles;
    std::vector<int> arcs;      // arc class ids
    std::vector<int> vertices;  // link vertex ids
    bool closed = true;
    bool orientable = true;
    int euler() const {
        return static_cast<int>(vertices.size()) - static_cast<int>(arcs.size()) +
               static_cast<int>(triangles.size());
    }
    int genus() const { return orientable ? (2 - euler()) / 2 : 2 - euler(); }
    bool sphere() const { return closed && euler() == 2; }
};

VertexLink vertex_link(const Links& links, int v);
std::vector<VertexLink> vertex_links(const Links& links);

}  // namespace ideal
