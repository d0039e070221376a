#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ideal/frames.hpp"
#include "ideal/normal.hpp"
#include "ideal/triangulation.hpp"

namespace ideal {

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

Triangulation parse_tri(std::istream& in);
Triangulation parse_tri_string(const std::string& text);
Triangulation read_tri(const std::string& path);
std::string serialize_tri(const Triangulation& tri);

// Frame files name arcs by their canonical ids, so parsing needs the links.
std::vector<Frame> parse_frames(std::istream& in, const Links& links);
std::vector<Frame> read_frames(const std::string& path, const Links& links);
std::string serialize_frames(const std::vector<Frame>& frames, const Links& links);

NormalCoords parse_coords(std::istream& in);
NormalCoords read_coords(const std::string& path);
std::string serialize_coords(const NormalCoords& c);

}  // namespace ideal
