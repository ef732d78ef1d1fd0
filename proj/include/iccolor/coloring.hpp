#pragma once

#include <vector>

#include "iccolor/plane_graph.hpp"

namespace icc {

// Vertex -> color in 1..palette_size, indexed by vertex id; 0 = unassigned.
struct Coloring {
    std::vector<int> color_of;
    int palette_size = 0;

    int get(VertexId v) const { return v < (int)color_of.size() ? color_of[v] : 0; }
    void set(VertexId v, int c) {
        if (v >= (int)color_of.size()) color_of.resize(v + 1, 0);
        color_of[v] = c;
    }
};

// Cyclic validity: any two distinct vertices incident with a common face get
// distinct colors, and every alive vertex has a color in range.
bool is_valid_cyclic_coloring(const PlaneGraph& g, const Coloring& c);

// Pairs of distinct vertices sharing a face, as sorted adjacency lists
// indexed by vertex id.
std::vector<std::vector<VertexId>> cyclic_adjacency(const PlaneGraph& g);

}  // namespace icc
