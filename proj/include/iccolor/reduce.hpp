#pragma once

#include "iccolor/coloring.hpp"
#include "iccolor/configuration.hpp"

namespace icc {

// One vertex to re-color during extension, in script order. cyclic_nbrs are
// taken in the original graph. same_color_groups lists vertex groups merged
// by the reduction; members that are cyclic neighbors of v are guaranteed to
// share a color, which is the slack the extension relies on.
struct ScriptEntry {
    VertexId v;
    std::vector<VertexId> cyclic_nbrs;
    std::vector<std::vector<VertexId>> same_color_groups;
    int expected_uncolored = 0;  // uncolored cyclic neighbors at this entry's turn
};

struct ReplayPlan {
    ConfigKind kind;
    std::vector<std::pair<VertexId, VertexId>> merges;  // (vanished id, surviving id)
    std::vector<ScriptEntry> script;                     // re-coloring order
    std::vector<VertexId> shared_cycle;                  // SepCycle kinds only

    VertexId find(VertexId v) const;  // representative after all merges
};

struct Reduction {
    std::vector<PlaneGraph> graphs;  // two for SepCycle kinds, one otherwise
    ReplayPlan plan;
};

// Applies the surgery of the matched configuration. Every output graph is
// hypothesis-valid, loopless and strictly smaller. Throws internal_error on
// states the hosting theorem forbids (loop-creating identification, invalid
// output).
Reduction apply_reduction(const PlaneGraph& g, const ConfigurationMatch& m);

// Extends cyclic 5-colorings of the reduced graphs to one of the original
// graph, exactly per the replay plan. Throws internal_error when a scripted
// vertex has no available color (extension slack violated).
Coloring extend_coloring(const PlaneGraph& original, const ReplayPlan& plan,
                         const std::vector<Coloring>& reduced_colorings);

// Cuts the sphere along a separating cycle given by the match; returns the
// two sides, each containing the cycle.
std::pair<PlaneGraph, PlaneGraph> split_along_cycle(const PlaneGraph& g,
                                                    const ConfigurationMatch& m);

}  // namespace icc
