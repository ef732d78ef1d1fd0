#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "iccolor/coloring.hpp"
#include "iccolor/pg_io.hpp"

namespace icc {

// One crossing after planarization: the dummy it replaced, the 4-face that
// took its place, and the two original edges that crossed there.
struct CrossingEntry {
    VertexId dummy = -1;
    int face = -1;                                   // face id in the planarized graph
    std::array<VertexId, 4> corners{};               // rotation order around the dummy
    std::array<std::pair<VertexId, VertexId>, 2> crossed{};
};

struct CrossingMap {
    std::vector<CrossingEntry> entries;
};

// Throws invalid_input_error when the drawing breaks an invariant: dummy of
// wrong degree, repeated endpoints, adjacent dummies, or two crossings whose
// eight endpoints are not pairwise distinct.
void check_drawing(const ICDrawing& d);

// Replaces every dummy by the quadrilateral face on its four neighbors
// (completing the quadrant triangles first when missing) and fan-triangulates
// every other face to size 3. The output passes validate_hypotheses.
std::pair<PlaneGraph, CrossingMap> planarize(const ICDrawing& d);

// Restores the crossed edges: a cyclic coloring of the planarized graph is a
// proper coloring of the drawn graph. Throws invalid_input_error when the
// given coloring is not cyclic-valid on the planarized graph.
Coloring lift_coloring(const ICDrawing& d, const PlaneGraph& planar, const CrossingMap& map,
                       const Coloring& c);

// Edge set of the drawn abstract graph: uncrossed drawing edges plus the
// crossed pairs. Used by the lift soundness check.
std::vector<std::pair<VertexId, VertexId>> original_edges(const ICDrawing& d,
                                                          const CrossingMap& map);

void write_crossing_map(std::ostream& out, const CrossingMap& map);

}  // namespace icc
