#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ideal/triangulation.hpp"

namespace ideal {

struct IsoMap {
    std::vector<int> tet;      // source tet -> target tet
    std::vector<Perm4> corner;  // source corners -> target corners, per source tet
};

// True when `m` carries every gluing of a onto a gluing of b bijectively.
bool verify_iso(const Triangulation& a, const Triangulation& b, const IsoMap& m);

// First isomorphism in seed order (tet, corner permutation), if any.
std::optional<IsoMap> isomorphic(const Triangulation& a, const Triangulation& b);

std::string describe(const Triangulation& a, const Triangulation& b, const IsoMap& m);

}  // namespace ideal
