#include "iccolor/planarize.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "iccolor/validate.hpp"

namespace icc {

void check_drawing(const ICDrawing& d) {
    const PlaneGraph& g = d.graph;
    std::set<VertexId> flag(d.dummies.begin(), d.dummies.end());
    for (VertexId x : d.dummies) {
        if (!g.has_vertex(x)) throw invalid_input_error("dummy flag on absent vertex");
        if (g.degree(x) != 4)
            throw invalid_input_error("dummy " + std::to_string(x) + " has degree " +
                                      std::to_string(g.degree(x)) + ", expected 4");
        auto nbrs = g.neighbors(x);
        std::set<VertexId> distinct(nbrs.begin(), nbrs.end());
        if (distinct.size() != 4)
            throw invalid_input_error("dummy " + std::to_string(x) +
                                      " has repeated endpoints");
        for (VertexId w : nbrs)
            if (flag.count(w))
                throw invalid_input_error("dummies " + std::to_string(x) + " and " +
                                          std::to_string(w) + " are adjacent");
    }
    std::set<VertexId> used;
    for (VertexId x : d.dummies)
        for (VertexId w : g.neighbors(x))
            if (!used.insert(w).second)
                throw invalid_input_error(
                    "independence violation: crossings share endpoint " + std::to_string(w));
}

std::pair<PlaneGraph, CrossingMap> planarize(const ICDrawing& d) {
    check_drawing(d);
    PlaneGraph g = d.graph;
    CrossingMap map;
    for (VertexId x : d.dummies) {
        CrossingEntry e;
        e.dummy = x;
        auto nbrs = g.neighbors(x);
        for (int i = 0; i < 4; ++i) e.corners[i] = nbrs[i];
        e.crossed[0] = {std::min(nbrs[0], nbrs[2]), std::max(nbrs[0], nbrs[2])};
        e.crossed[1] = {std::min(nbrs[1], nbrs[3]), std::max(nbrs[1], nbrs[3])};
        // complete the four quadrant triangles
        for (int i = 0; i < 4; ++i) {
            Dart out = g.rotation(x)[(i + 1) % 4];  // x -> a_{i+1}
            int f = g.face_of(out);
            if (g.face(f).size() == 3) continue;
            Dart into = twin(g.rotation(x)[i]);  // dart a_i -> x
            // chord a_i -> a_{i+1} cutting off the triangle (a_i, x, a_{i+1})
            g.add_chord_raw(into, g.next_in_face(out));
            g.retrace();
        }
        map.entries.push_back(e);
    }
    for (const auto& e : map.entries) g.delete_vertex(e.dummy);
    // identify the crossing quads, then triangulate everything else
    std::set<std::vector<VertexId>> quads;
    for (auto& e : map.entries) {
        std::vector<VertexId> key(e.corners.begin(), e.corners.end());
        std::sort(key.begin(), key.end());
        quads.insert(key);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int f = 0; f < g.n_faces(); ++f) {
            if (g.face(f).size() <= 3) continue;
            auto vs = g.face_vertices(f);
            if (g.face(f).size() == 4 && quads.count(vs)) continue;
            g.triangulate_face(f);
            changed = true;
            break;
        }
    }
    for (auto& e : map.entries) {
        std::vector<VertexId> key(e.corners.begin(), e.corners.end());
        std::sort(key.begin(), key.end());
        e.face = -1;
        for (int f = 0; f < g.n_faces(); ++f)
            if (g.face(f).size() == 4 && g.face_vertices(f) == key) {
                e.face = f;
                break;
            }
        ICC_CHECK(e.face >= 0, "crossing quad lost during planarization");
    }
    auto report = validate_hypotheses(g);
    if (!report.admissible())
        throw invalid_input_error("planarized drawing fails hypotheses:\n" + report.to_string());
    return {std::move(g), std::move(map)};
}

std::vector<std::pair<VertexId, VertexId>> original_edges(const ICDrawing& d,
                                                          const CrossingMap& map) {
    std::set<VertexId> flag(d.dummies.begin(), d.dummies.end());
    std::set<std::pair<VertexId, VertexId>> out;
    for (VertexId v : d.graph.vertices()) {
        if (flag.count(v)) continue;
        for (VertexId w : d.graph.neighbors(v))
            if (!flag.count(w) && v < w) out.insert({v, w});
    }
    for (const auto& e : map.entries) {
        out.insert(e.crossed[0]);
        out.insert(e.crossed[1]);
    }
    return {out.begin(), out.end()};
}

Coloring lift_coloring(const ICDrawing& d, const PlaneGraph& planar, const CrossingMap& map,
                       const Coloring& c) {
    if (!is_valid_cyclic_coloring(planar, c))
        throw invalid_input_error("coloring is not cyclic-valid on the planarized graph");
    Coloring out;
    out.palette_size = c.palette_size;
    for (VertexId v : planar.vertices()) out.set(v, c.get(v));
    for (auto [u, w] : original_edges(d, map))
        ICC_CHECK(out.get(u) != out.get(w), "lifted coloring has a monochromatic edge");
    return out;
}

void write_crossing_map(std::ostream& out, const CrossingMap& map) {
    for (const auto& e : map.entries) {
        out << "x " << e.dummy << " face " << e.face << " corners";
        for (VertexId v : e.corners) out << ' ' << v;
        out << " cross " << e.crossed[0].first << '-' << e.crossed[0].second << ' '
            << e.crossed[1].first << '-' << e.crossed[1].second << '\n';
    }
}

}  // namespace icc
