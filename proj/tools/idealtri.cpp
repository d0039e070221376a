// idealtri: command line front end for the ideal triangulation library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ideal/crush.hpp"
#include "ideal/inflate.hpp"
#include "ideal/io.hpp"
#include "ideal/isomorphism.hpp"
#include "ideal/skeleton.hpp"

using namespace ideal;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kObstructed = 2, kNotIsomorphic = 3 };

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

// "t<tet>:<abc>" -> face class
int face_class_of(const Triangulation& tri, const Links& links, const std::string& text) {
    auto colon = text.find(':');
    if (text.size() < 4 || text[0] != 't' || colon == std::string::npos) throw Error("bad face " + text);
    int t = std::stoi(text.substr(1, colon - 1));
    std::string abc = text.substr(colon + 1);
    if (t < 0 || t >= tri.size() || abc.size() != 3) throw Error("bad face " + text);
    return links.sk.face_of[t][missing_corner(abc)];
}

// --order t0:012=t0:012:2,t0:012:1
void parse_order(const Triangulation& tri, const Links& links, const std::string& text, FaceOrders& orders) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw Error("expected FACE=ARC,ARC in " + text);
    int fc = face_class_of(tri, links, text.substr(0, eq));
    std::vector<int> arcs;
    for (const auto& id : split(text.substr(eq + 1), ',')) {
        int a = links.find_arc(id);
        if (a < 0) throw Error("unknown arc " + id);
        arcs.push_back(a);
    }
    orders[fc] = arcs;
}

// --plan 1:0=123,134  (edge class : branch ordinal = triangles)
void parse_plan(const std::string& text, std::map<std::pair<int, int>, PolygonPlan>& plans) {
    auto eq = text.find('=');
    auto colon = text.find(':');
    if (eq == std::string::npos || colon == std::string::npos || colon > eq) throw Error("expected E:N=abc,... in " + text);
    int edge = std::stoi(text.substr(0, colon));
    int ord = std::stoi(text.substr(colon + 1, eq - colon - 1));
    PolygonPlan plan;
    for (const auto& t : split(text.substr(eq + 1), ',')) {
        if (t.size() != 3) throw Error("bad triangle " + t);
        plan.push_back({t[0] - '0', t[1] - '0', t[2] - '0'});
    }
    plans[{edge, ord}] = plan;
}

std::string summary(const Triangulation& tri) {
    std::ostringstream out;
    Skeleton sk = skeleton(tri);
    auto orient = orientability(tri);
    out << "name " << tri.name() << "\n";
    out << "tetrahedra " << tri.size() << "\n";
    out << "vertices " << sk.vertices.size() << "\n";
    out << "edges " << sk.edges.size() << "\n";
    out << "faces " << sk.faces.size() << "\n";
    out << "boundary-faces " << tri.boundary_face_count() << "\n";
    out << "components " << components(tri).size() << "\n";
    out << "orientable " << (orient.orientable ? "yes" : "no") << "\n";
    out << "euler " << euler_characteristic(tri, sk) << "\n";
    if (!tri.closed()) {
        for (const auto& b : boundary_complex(tri, sk))
            out << "boundary-component vertices " << b.vertices << " edges " << b.edges << " faces " << b.faces.size()
                << " euler " << b.euler() << (b.orientable ? " orientable" : " non-orientable") << "\n";
    }
    return out.str();
}

std::string frame_lines(const std::vector<Frame>& frames, const Links& links, const Complexity* c) {
    std::ostringstream out;
    out << serialize_frames(frames, links);
    if (c)
        out << "# C " << c->C << " e " << c->stats.e << " crossings " << c->crossings << " b " << c->stats.b << " vb "
            << c->stats.vb << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inflation and crushing of ideal triangulations"};
    app.require_subcommand(1);

    std::string tri_path, other_path, out_path, coords_out;
    int max_edges = 8, max_coord = 2, side = -1;
    bool with_complexity = false, spheres_only = false, provenance = false;
    std::vector<std::string> orders, plans;

    auto* check = app.add_subcommand("check", "validate a triangulation and print a summary");
    check->add_option("tri", tri_path)->required();

    auto* skel = app.add_subcommand("skeleton", "list vertex, edge and face classes");
    skel->add_option("tri", tri_path)->required();

    auto* links_cmd = app.add_subcommand("links", "list vertex links and their arcs");
    links_cmd->add_option("tri", tri_path)->required();

    auto* frames = app.add_subcommand("frames", "frame enumeration and checks");
    frames->require_subcommand(1);
    auto* fenum = frames->add_subcommand("enumerate", "list frame collections");
    fenum->add_option("tri", tri_path)->required();
    fenum->add_option("--max-edges", max_edges, "edges per frame")->capture_default_str();
    fenum->add_flag("--complexity", with_complexity, "append complexities");
    auto* fval = frames->add_subcommand("validate", "validate a frame file");
    fval->add_option("tri", tri_path)->required();
    fval->add_option("frames", other_path)->required();
    auto* fcx = frames->add_subcommand("complexity", "complexity of a frame collection");
    fcx->add_option("tri", tri_path)->required();
    fcx->add_option("frames", other_path)->required();

    auto* infl = app.add_subcommand("inflate", "inflate along a frame collection");
    infl->add_option("tri", tri_path)->required();
    infl->add_option("frames", other_path)->required();
    infl->add_option("-o,--output", out_path, "output triangulation");
    infl->add_option("--order", orders, "face chain order FACE=ARC,ARC (repeatable)");
    infl->add_option("--plan", plans, "branch subdivision EDGE:N=abc,abc (repeatable)");
    infl->add_option("--coords-out", coords_out, "write boundary-linking coordinates");
    infl->add_flag("--provenance", provenance, "print the origin of each tetrahedron");

    auto* crush_cmd = app.add_subcommand("crush", "crush along a normal surface");
    crush_cmd->add_option("tri", tri_path)->required();
    crush_cmd->add_option("coords", other_path)->required();
    crush_cmd->add_option("--side", side, "piece id inside the side to keep");
    crush_cmd->add_option("-o,--output", out_path, "output triangulation");

    auto* cb = app.add_subcommand("crush-boundary", "crush along the boundary-linking surface");
    cb->add_option("tri", tri_path)->required();
    cb->add_option("-o,--output", out_path, "output triangulation");

    auto* iso = app.add_subcommand("iso", "test two triangulations for combinatorial isomorphism");
    iso->add_option("a", tri_path)->required();
    iso->add_option("b", other_path)->required();

    auto* surf = app.add_subcommand("surfaces", "normal surfaces");
    surf->require_subcommand(1);
    auto* senum = surf->add_subcommand("enumerate", "small connected normal surfaces");
    senum->add_option("tri", tri_path)->required();
    senum->add_option("--max-coord", max_coord)->capture_default_str();
    senum->add_flag("--spheres", spheres_only, "only 2-spheres");

    CLI11_PARSE(app, argc, argv);

    try {
        Triangulation tri = read_tri(tri_path);
        auto problems = validate(tri);
        if (!problems.empty()) {
            for (const auto& p : problems) std::cerr << "invalid: " << p << "\n";
            return kInvalid;
        }
        if (check->parsed()) {
            std::cout << summary(tri);
            Links links = build_links(tri);
            for (const auto& vl : vertex_links(links))
                std::cout << "vertex " << vl.vertex << " link euler " << vl.euler()
                          << (vl.closed ? " closed" : " bounded") << (vl.orientable ? " orientable" : " non-orientable")
                          << "\n";
            return kOk;
        }
        if (skel->parsed()) {
            Skeleton sk = skeleton(tri);
            for (std::size_t v = 0; v < sk.vertices.size(); ++v) {
                std::cout << "vertex " << v << (sk.vertices[v].boundary ? " boundary" : "") << ":";
                for (auto [t, c] : sk.vertices[v].members) std::cout << " " << tri.label(t) << "." << c;
                std::cout << "\n";
            }
            for (std::size_t e = 0; e < sk.edges.size(); ++e) {
                const auto& ec = sk.edges[e];
                std::cout << "edge " << e << " degree " << ec.degree() << (ec.boundary ? " boundary" : "")
                          << (ec.self_reversed ? " self-reversed" : "") << ":";
                for (const auto& m : ec.members)
                    std::cout << " " << tri.label(m.tet) << "." << kEdgeVertex[m.edge][0] << kEdgeVertex[m.edge][1]
                              << (m.reversed ? "~" : "");
                std::cout << "\n";
            }
            for (std::size_t f = 0; f < sk.faces.size(); ++f) {
                const auto& fc = sk.faces[f];
                std::cout << "face " << f << ": " << tri.label(fc.tet) << "(" << face_name(fc.face) << ")";
                if (fc.other_tet >= 0) std::cout << " " << tri.label(fc.other_tet) << "(" << face_name(fc.other_face) << ")";
                std::cout << "\n";
            }
            return kOk;
        }
        if (iso->parsed()) {
            Triangulation b = read_tri(other_path);
            auto m = isomorphic(tri, b);
            if (!m) {
                std::cout << "not isomorphic\n";
                return kNotIsomorphic;
            }
            std::cout << describe(tri, b, *m);
            return kOk;
        }
        if (crush_cmd->parsed() || cb->parsed()) {
            NormalCoords s = crush_cmd->parsed() ? read_coords(other_path) : boundary_linking_coords(tri);
            CellDecomposition cd = cell_decomposition(tri, s, side);
            ObstructionReport rep = obstructions(cd);
            std::cerr << describe(cd, tri) << "obstructions " << rep.text() << "\n";
            if (!rep.clear()) return kObstructed;
            write_out(out_path, serialize_tri(crush(tri, cd)));
            return kOk;
        }
        if (senum->parsed()) {
            int shown = 0;
            for (const auto& s : enumerate_small_surfaces(tri, max_coord)) {
                if (!s.report.connected()) continue;
                if (spheres_only && s.report.euler() != 2) continue;
                const auto& c = s.report.components[0];
                std::cout << "# surface " << shown++ << " euler " << c.euler << (c.orientable ? " orientable" : " non-orientable")
                          << " boundary-edges " << c.boundary_edges << "\n"
                          << serialize_coords(s.coords);
            }
            return kOk;
        }

        Links links = build_links(tri);
        if (links_cmd->parsed()) {
            for (const auto& vl : vertex_links(links)) {
                std::cout << "vertex " << vl.vertex << " euler " << vl.euler()
                          << (vl.orientable ? " orientable" : " non-orientable") << (vl.closed ? "" : " bounded")
                          << " triangles " << vl.triangles.size() << " arcs " << vl.arcs.size() << "\n";
                for (int a : vl.arcs) {
                    const ArcClass& ac = links.arcs[a];
                    std::cout << "  " << ac.name << " " << ac.start << " -> " << ac.end << "\n";
                }
            }
            return kOk;
        }
        if (fenum->parsed()) {
            for (const auto& col : enumerate_frame_collections(links, max_edges)) {
                if (with_complexity) {
                    Complexity c = complexity(tri, links, col);
                    std::cout << frame_lines(col, links, &c);
                } else {
                    std::cout << frame_lines(col, links, nullptr);
                }
                std::cout << "\n";
            }
            return kOk;
        }
        std::vector<Frame> fr;
        try {
            fr = read_frames(other_path, links);
        } catch (const Error& e) {
            std::cerr << "invalid frame: " << e.what() << "\n";
            return kInvalid;
        }
        if (fval->parsed()) {
            bool ok = true;
            for (const Frame& f : fr) {
                auto rep = validate_frame(links, f);
                std::cout << "frame vertex " << f.vertex << (rep.valid ? " valid" : " invalid") << "\n";
                for (const auto& p : rep.problems) std::cout << "  " << p << "\n";
                ok = ok && rep.valid;
            }
            return ok ? kOk : kInvalid;
        }
        if (fcx->parsed()) {
            Complexity c = complexity(tri, links, fr);
            std::cout << frame_lines(fr, links, &c);
            return kOk;
        }
        if (infl->parsed()) {
            InflateOptions opt;
            for (const auto& o : orders) parse_order(tri, links, o, opt.orders);
            if (!orders.empty()) {
                // faces not named keep the complexity-minimizing order
                Complexity c = complexity(tri, links, fr);
                for (auto& [fc, arcs] : c.orders) opt.orders.emplace(fc, arcs);
                opt.use_orders = true;
            }
            for (const auto& p : plans) parse_plan(p, opt.plans);
            InflationResult r = inflate(tri, links, fr, opt);
            std::cerr << "tetrahedra " << r.tri.size() << " C " << r.C << " crossings " << r.crossings << " added "
                      << r.added << "\n";
            if (provenance) std::cerr << provenance_report(r, links);
            write_out(out_path, serialize_tri(r.tri));
            if (!coords_out.empty()) {
                std::string text;
                for (const auto& c : r.boundary_coords) text += serialize_coords(c) + "\n";
                write_out(coords_out, text);
            }
            return kOk;
        }
    } catch (const ObstructionError& e) {
        std::cerr << e.what() << "\n";
        return kObstructed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
