#include "iccolor/coloring.hpp"

#include <algorithm>
#include <set>

namespace icc {

bool is_valid_cyclic_coloring(const PlaneGraph& g, const Coloring& c) {
    for (VertexId v : g.vertices()) {
        int col = c.get(v);
        if (col < 1 || col > c.palette_size) return false;
    }
    for (int f = 0; f < g.n_faces(); ++f) {
        auto vs = g.face_vertices(f);
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (c.get(vs[i]) == c.get(vs[j])) return false;
    }
    return true;
}

std::vector<std::vector<VertexId>> cyclic_adjacency(const PlaneGraph& g) {
    std::vector<std::set<VertexId>> adj;
    auto touch = [&](VertexId v) {
        if (v >= (int)adj.size()) adj.resize(v + 1);
    };
    for (int f = 0; f < g.n_faces(); ++f) {
        auto vs = g.face_vertices(f);
        for (VertexId v : vs) touch(v);
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                adj[vs[i]].insert(vs[j]);
                adj[vs[j]].insert(vs[i]);
            }
    }
    std::vector<std::vector<VertexId>> out(adj.size());
    for (size_t v = 0; v < adj.size(); ++v) out[v] = {adj[v].begin(), adj[v].end()};
    return out;
}

}  // namespace icc
