#include "ideal/io.hpp"

#include <fstream>
#include <sstream>

namespace ideal {

namespace {

// Splits a line into tokens, dropping everything from a token starting with '#'.
std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

bool face_triple(const std::string& s) {
    if (s.size() != 3) return false;
    int seen = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '3') return false;
        seen |= 1 << (ch - '0');
    }
    return __builtin_popcount(seen) == 3;
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return in;
}

}  // namespace

Triangulation parse_tri(std::istream& in) {
    Triangulation tri;
    bool header = false;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto tok = tokens(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "tri") {
            if (header) throw ParseError("duplicate tri header", no);
            if (tok.size() != 2) throw ParseError("expected: tri <name>", no);
            tri.set_name(tok[1]);
            header = true;
            continue;
        }
        if (!header) throw ParseError("missing tri header", no);
        if (kw == "tet") {
            if (tok.size() != 2) throw ParseError("expected: tet <label>", no);
            if (tri.find(tok[1]) >= 0) throw ParseError("duplicate tetrahedron " + tok[1], no);
            tri.add_tet(tok[1]);
        } else if (kw == "glue") {
            if (tok.size() != 5) throw ParseError("expected: glue <tet> <abc> <tet> <abc>", no);
            int a = tri.find(tok[1]), b = tri.find(tok[3]);
            if (a < 0) throw ParseError("unknown tetrahedron " + tok[1], no);
            if (b < 0) throw ParseError("unknown tetrahedron " + tok[3], no);
            if (!face_triple(tok[2]) || !face_triple(tok[4])) throw ParseError("bad face triple", no);
            try {
                tri.glue(a, tok[2], b, tok[4]);
            } catch (const Error& e) {
                throw ParseError(e.what(), no);
            }
        } else {
            throw ParseError("unknown keyword " + kw, no);
        }
    }
    if (!header) throw ParseError("missing tri header", no + 1);
    return tri;
}

Triangulation parse_tri_string(const std::string& text) {
    std::istringstream in(text);
    return parse_tri(in);
}

Triangulation read_tri(const std::string& path) {
    auto in = open(path);
    return parse_tri(in);
}

std::string serialize_tri(const Triangulation& tri) {
    std::ostringstream out;
    out << "tri " << tri.name() << "\n";
    for (const auto& l : tri.labels()) out << "tet " << l << "\n";
    static constexpr int by_name[4] = {3, 2, 1, 0};
    auto rank = [](int f) { return 3 - f; };
    for (int t = 0; t < tri.size(); ++t) {
        for (int f : by_name) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            int h = g.perm[f];
            if (std::make_pair(g.tet, rank(h)) < std::make_pair(t, rank(f))) continue;
            std::string img;
            for (int v : kFaceVertex[f]) img += static_cast<char>('0' + g.perm[v]);
            out << "glue " << tri.label(t) << " " << face_name(f) << " " << tri.label(g.tet) << " " << img
                << "\n";
        }
    }
    return out.str();
}

std::vector<Frame> parse_frames(std::istream& in, const Links& links) {
    struct Pending {
        int vertex = -1;
        int line = 0;
        std::vector<std::vector<DirectedArc>> branches;
        std::vector<int> arcs;
    };
    std::vector<Pending> pending;
    std::string line;
    int no = 0;
    auto arc_of = [&](const std::string& id, int ln) {
        int a = links.find_arc(id);
        if (a < 0) throw ParseError("unknown arc " + id, ln);
        return a;
    };
    while (std::getline(in, line)) {
        ++no;
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok[0] == "frame") {
            if (tok.size() != 2) throw ParseError("expected: frame t<tet>:<corner>", no);
            const std::string& rep = tok[1];
            auto colon = rep.find(':');
            int t = -1, c = -1;
            try {
                if (rep.size() < 4 || rep[0] != 't' || colon == std::string::npos) throw 0;
                t = std::stoi(rep.substr(1, colon - 1));
                c = std::stoi(rep.substr(colon + 1));
            } catch (...) {
                throw ParseError("bad vertex representative " + rep, no);
            }
            if (t < 0 || t >= static_cast<int>(links.sk.vertex_of.size()) || c < 0 || c > 3)
                throw ParseError("vertex representative out of range " + rep, no);
            pending.push_back({links.sk.vertex_of[t][c], no, {}, {}});
        } else if (tok[0] == "branch" || tok[0] == "arcs") {
            if (pending.empty()) throw ParseError(tok[0] + " before frame", no);
            if (tok.size() < 2) throw ParseError("empty " + tok[0], no);
            std::vector<DirectedArc> br;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                std::string id = tok[i];
                bool rev = false;
                if (id[0] == '+' || id[0] == '-') {
                    rev = id[0] == '-';
                    id = id.substr(1);
                }
                int a = arc_of(id, no);
                if (tok[0] == "arcs") {
                    if (rev) throw ParseError("arcs lines take unsigned ids", no);
                    pending.back().arcs.push_back(a);
                } else {
                    br.push_back({a, rev});
                }
            }
            if (tok[0] == "branch") pending.back().branches.push_back(std::move(br));
        } else {
            throw ParseError("unknown keyword " + tok[0], no);
        }
    }
    std::vector<Frame> out;
    for (auto& p : pending) {
        try {
            if (!p.branches.empty() && !p.arcs.empty())
                throw Error("frame mixes branch and arcs lines");
            if (!p.branches.empty())
                out.push_back(make_frame(links, p.vertex, p.branches));
            else
                out.push_back(make_frame(links, p.vertex, p.arcs));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), p.line);
        }
    }
    return out;
}

std::vector<Frame> read_frames(const std::string& path, const Links& links) {
    auto in = open(path);
    return parse_frames(in, links);
}

std::string serialize_frames(const std::vector<Frame>& frames, const Links& links) {
    std::ostringstream out;
    for (const Frame& f : frames) {
        auto [t, c] = links.sk.vertices.at(f.vertex).members.front();
        out << "frame t" << t << ":" << c << "\n";
        for (const Branch& b : f.branches) {
            out << "branch";
            for (const auto& da : b.arcs) out << " " << (da.reversed ? "-" : "+") << links.arcs[da.arc].name;
            out << "\n";
        }
    }
    return out.str();
}

NormalCoords parse_coords(std::istream& in) {
    NormalCoords c;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok.size() != 7) throw ParseError("expected 7 integers", no);
        NormalRow row{};
        for (int i = 0; i < 7; ++i) {
            try {
                std::size_t used = 0;
                row[i] = std::stoi(tok[i], &used);
                if (used != tok[i].size()) throw 0;
            } catch (...) {
                throw ParseError("bad integer " + tok[i], no);
            }
            if (row[i] < 0) throw ParseError("negative coordinate", no);
        }
        c.rows.push_back(row);
    }
    return c;
}

NormalCoords read_coords(const std::string& path) {
    auto in = open(path);
    return parse_coords(in);
}

std::string serialize_coords(const NormalCoords& c) {
    std::ostringstream out;
    for (const auto& r : c.rows) {
        for (int i = 0; i < 7; ++i) out << (i ? " " : "") << r[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace ideal
