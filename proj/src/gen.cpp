#include "iccolor/gen.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "iccolor/validate.hpp"

namespace icc {

GenMode parse_gen_mode(const std::string& s) {
    if (s == "triangulation") return GenMode::Triangulation;
    if (s == "with-quads") return GenMode::WithQuads;
    if (s == "ic-drawing") return GenMode::ICDrawing;
    throw invalid_input_error("unknown mode '" + s + "'");
}

namespace {

PlaneGraph tetrahedron() {
    return PlaneGraph::from_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

// Flips the diagonal of the two triangles at dart d when legal: distinct
// triangle faces, distinct non-adjacent apexes, both endpoints of degree
// at least 4.
bool try_flip(PlaneGraph& g, Dart d) {
    int f1 = g.face_of(d), f2 = g.face_of(twin(d));
    if (f1 == f2) return false;
    if (g.face(f1).size() != 3 || g.face(f2).size() != 3) return false;
    VertexId u = g.origin(d), w = g.head(d);
    if (g.degree(u) < 4 || g.degree(w) < 4) return false;
    auto third = [&](int f) {
        for (VertexId x : g.face_vertices(f))
            if (x != u && x != w) return x;
        return -1;
    };
    VertexId a = third(f1), b = third(f2);
    if (a < 0 || b < 0 || a == b || g.adjacent(a, b)) return false;
    g.delete_edge_of_dart(d);
    // the hole is the quad (u, a, w, b); split along the other diagonal
    int hole = -1;
    for (int f : g.common_faces(a, b))
        if (g.face(f).size() == 4) hole = f;
    if (hole < 0) return false;  // should not happen
    g.add_edge_in_face(hole, a, b);
    return true;
}

// Picks a random live dart, uniformly over dart slots by rejection.
Dart random_dart(const PlaneGraph& g, std::mt19937_64& rng) {
    int lim = g.dart_limit();
    for (int tries = 0; tries < 8 * lim; ++tries) {
        Dart d = (Dart)(rng() % (std::uint64_t)lim);
        if (g.dart_alive(d)) return d;
    }
    for (Dart d = 0; d < lim; ++d)
        if (g.dart_alive(d)) return d;
    throw internal_error("graph has no darts");
}

PlaneGraph grow_triangulation(int n, std::mt19937_64& rng) {
    if (n < 4) throw invalid_input_error("triangulation needs n >= 4");
    PlaneGraph g = tetrahedron();
    while (g.n_vertices() < n) {
        int f = (int)(rng() % (std::uint64_t)g.n_faces());
        if (g.face(f).size() != 3) continue;
        g.star_face(f);
        // occasional flip keeps the shape from degenerating into stacked fans
        for (int t = 0; t < 2; ++t) try_flip(g, random_dart(g, rng));
    }
    for (int t = 0; t < 3 * n; ++t) try_flip(g, random_dart(g, rng));
    return g;
}

struct QuadCarve {
    PlaneGraph graph;
    // per carved quad: corners in face order (u, a, w, b) where (u,w) was the
    // deleted diagonal and (a,b) the non-edge pair
    std::vector<std::array<VertexId, 4>> quads;
};

QuadCarve carve_quads(int n, int q, std::mt19937_64& rng) {
    PlaneGraph g = grow_triangulation(n, rng);
    std::set<VertexId> used;
    std::vector<std::array<VertexId, 4>> quads;
    int budget = std::max(10 * q, 10);
    while ((int)quads.size() < q && budget-- > 0) {
        Dart d = random_dart(g, rng);
        VertexId u = g.origin(d), w = g.head(d);
        if (g.degree(u) < 4 || g.degree(w) < 4) continue;
        int f1 = g.face_of(d), f2 = g.face_of(twin(d));
        if (f1 == f2 || g.face(f1).size() != 3 || g.face(f2).size() != 3) continue;
        auto third = [&](int f) {
            for (VertexId x : g.face_vertices(f))
                if (x != u && x != w) return x;
            return -1;
        };
        VertexId a = third(f1), b = third(f2);
        if (a < 0 || b < 0 || a == b || g.adjacent(a, b)) continue;
        if (used.count(u) || used.count(w) || used.count(a) || used.count(b)) continue;
        g.delete_edge_of_dart(d);
        used.insert({u, w, a, b});
        quads.push_back({u, a, w, b});
    }
    if ((int)quads.size() < q)
        throw infeasible_error("placed only " + std::to_string(quads.size()) + " of " +
                               std::to_string(q) + " disjoint quads");
    return {std::move(g), std::move(quads)};
}

}  // namespace

PlaneGraph gen_instance(const GenSpec& spec) {
    if (spec.mode == GenMode::ICDrawing)
        throw invalid_input_error("ic-drawing mode produces a drawing; use gen_drawing");
    std::mt19937_64 rng(spec.seed);
    PlaneGraph g;
    if (spec.mode == GenMode::Triangulation) {
        g = grow_triangulation(spec.n, rng);
    } else {
        if (4 * spec.quads > spec.n)
            throw invalid_input_error("with-quads needs 4*quads <= n");
        g = carve_quads(spec.n, spec.quads, rng).graph;
    }
    auto rep = validate_hypotheses(g);
    ICC_CHECK(rep.admissible(), "generator emitted an invalid instance: " + rep.to_string());
    return g;
}

ICDrawing gen_drawing(const GenSpec& spec) {
    if (spec.mode != GenMode::ICDrawing)
        throw invalid_input_error("gen_drawing needs ic-drawing mode");
    if (4 * spec.quads > spec.n) throw invalid_input_error("ic-drawing needs 4*quads <= n");
    std::mt19937_64 rng(spec.seed);
    QuadCarve carved = carve_quads(spec.n, spec.quads, rng);
    ICDrawing d;
    d.graph = std::move(carved.graph);
    for (const auto& corners : carved.quads) {
        int f = -1;
        std::vector<VertexId> key(corners.begin(), corners.end());
        std::sort(key.begin(), key.end());
        for (int i = 0; i < d.graph.n_faces(); ++i)
            if (d.graph.face(i).size() == 4 && d.graph.face_vertices(i) == key) f = i;
        ICC_CHECK(f >= 0, "carved quad lost");
        d.dummies.push_back(d.graph.star_face(f));
    }
    std::sort(d.dummies.begin(), d.dummies.end());
    return d;
}

PlaneGraph gen_with_big_faces(int n, int count, int face_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PlaneGraph g = grow_triangulation(n, rng);
    std::set<VertexId> blocked;
    int carved = 0;
    for (VertexId v : g.vertices()) {
        if (carved == count) break;
        if (!g.has_vertex(v) || g.degree(v) != face_size) continue;
        if (blocked.count(v)) continue;
        bool ok = true;
        auto nbrs = g.neighbors(v);
        for (VertexId u : nbrs)
            if (blocked.count(u)) ok = false;
        // link must be an induced cycle of distinct vertices
        std::set<VertexId> distinct(nbrs.begin(), nbrs.end());
        if ((int)distinct.size() != face_size) ok = false;
        if (!ok) continue;
        blocked.insert(v);
        for (VertexId u : nbrs) blocked.insert(u);
        g.delete_vertex(v);
        ++carved;
    }
    if (carved < count)
        throw infeasible_error("carved only " + std::to_string(carved) + " of " +
                               std::to_string(count) + " big faces");
    auto rep = validate_disjoint_big_faces(g);
    ICC_CHECK(rep.admissible(), "big-face generator emitted invalid instance: " + rep.to_string());
    return g;
}

}  // namespace icc
