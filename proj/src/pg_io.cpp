#include "iccolor/pg_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace icc {

namespace {

struct Parsed {
    int n = 0, m = 0;
    std::vector<std::pair<VertexId, std::vector<VertexId>>> rows;
    std::vector<VertexId> dummies;
    bool has_dummy_line = false;
};

Parsed parse_lines(std::istream& in) {
    Parsed p;
    bool header_seen = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        auto fail = [&](const std::string& why) {
            throw invalid_input_error("parse error at line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "pg") {
            if (header_seen) fail("duplicate header");
            if (!(ls >> p.n >> p.m)) fail("header needs 'pg <n> <m>'");
            header_seen = true;
        } else if (tag == "v") {
            if (!header_seen) fail("vertex row before header");
            std::string idtok;
            if (!(ls >> idtok)) fail("vertex row needs an id");
            if (!idtok.empty() && idtok.back() == ':') idtok.pop_back();
            else {
                std::string colon;
                if (!(ls >> colon) || colon != ":") fail("expected ':' after vertex id");
            }
            VertexId id;
            try {
                id = std::stoi(idtok);
            } catch (...) {
                fail("bad vertex id '" + idtok + "'");
                return p;
            }
            std::vector<VertexId> nbrs;
            VertexId w;
            while (ls >> w) nbrs.push_back(w);
            p.rows.emplace_back(id, std::move(nbrs));
        } else if (tag == "x") {
            if (p.has_dummy_line) fail("duplicate dummy line");
            p.has_dummy_line = true;
            VertexId w;
            while (ls >> w) p.dummies.push_back(w);
        } else {
            fail("unknown tag '" + tag + "'");
        }
    }
    if (!header_seen) throw invalid_input_error("missing 'pg <n> <m>' header");
    if ((int)p.rows.size() != p.n)
        throw invalid_input_error("header says " + std::to_string(p.n) + " vertices, found " +
                                  std::to_string(p.rows.size()) + " rows");
    int mentions = 0;
    for (const auto& [v, nbrs] : p.rows) {
        (void)v;
        mentions += (int)nbrs.size();
    }
    if (mentions != 2 * p.m)
        throw invalid_input_error("header says " + std::to_string(p.m) +
                                  " edges, adjacency lists sum to " + std::to_string(mentions) +
                                  " darts");
    return p;
}

}  // namespace

PlaneGraph read_pg(std::istream& in) {
    Parsed p = parse_lines(in);
    if (p.has_dummy_line)
        throw invalid_input_error(".pg file carries a dummy line; use read_icd");
    return PlaneGraph::from_neighbor_lists(p.rows);
}

PlaneGraph read_pg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open " + path);
    return read_pg(in);
}

void write_pg(std::ostream& out, const PlaneGraph& g) {
    out << "pg " << g.n_vertices() << ' ' << g.n_edges() << '\n';
    for (VertexId v : g.vertices()) {
        out << "v " << v << ':';
        for (VertexId w : g.neighbors(v)) out << ' ' << w;
        out << '\n';
    }
}

std::string to_pg_string(const PlaneGraph& g) {
    std::ostringstream os;
    write_pg(os, g);
    return os.str();
}

ICDrawing read_icd(std::istream& in) {
    Parsed p = parse_lines(in);
    ICDrawing d;
    d.graph = PlaneGraph::from_neighbor_lists(p.rows);
    d.dummies = p.dummies;
    std::sort(d.dummies.begin(), d.dummies.end());
    d.dummies.erase(std::unique(d.dummies.begin(), d.dummies.end()), d.dummies.end());
    for (VertexId x : d.dummies)
        if (!d.graph.has_vertex(x))
            throw invalid_input_error("dummy flag on unknown vertex " + std::to_string(x));
    return d;
}

ICDrawing read_icd_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open " + path);
    return read_icd(in);
}

void write_icd(std::ostream& out, const ICDrawing& d) {
    write_pg(out, d.graph);
    out << "x";
    for (VertexId x : d.dummies) out << ' ' << x;
    out << '\n';
}

}  // namespace icc
