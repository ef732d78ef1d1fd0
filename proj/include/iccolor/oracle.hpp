#pragma once

#include <cstdint>

#include "iccolor/coloring.hpp"
#include "iccolor/plane_graph.hpp"

namespace icc {

struct OracleResult {
    bool feasible = false;
    Coloring witness;          // valid iff feasible
    std::int64_t nodes = 0;    // backtracking nodes explored
};

// Exact cyclic k-colorability by backtracking on the cyclic adjacency graph,
// most-constrained vertex first with lowest-id tie-break. Exponential; the
// size guard rejects instances above max_n unless raised by the caller.
OracleResult oracle_color(const PlaneGraph& g, int k, int max_n = 20);

}  // namespace icc
