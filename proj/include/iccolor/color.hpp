#pragma once

#include <string>
#include <vector>

#include "iccolor/coloring.hpp"
#include "iccolor/plane_graph.hpp"

namespace icc {

struct ReductionTrace {
    std::vector<std::string> lines;  // "step <i>: <kind> bind=<ids> → n=<n'>"
};

// Cyclic 5-coloring by reduction: find a configuration, apply its surgery,
// recurse, extend the coloring back. Instances of at most 6 vertices go to
// the exact oracle. Throws invalid_input_error when the instance fails
// validate_hypotheses and internal_error on theorem-forbidden outcomes (no
// configuration found, extension slack violated); the latter carries the
// instance and its charge audit.
Coloring color(const PlaneGraph& g, ReductionTrace* trace = nullptr);

// Greedy coloring along a smallest-last order of the cyclic adjacency graph
// (a clique per face of size >= 4). Works for any max face size as long as
// the big faces are pairwise vertex-disjoint; uses at most (max face size)+3
// colors.
Coloring color_degenerate(const PlaneGraph& g);

}  // namespace icc
