#pragma once

#include <string>
#include <vector>

#include "iccolor/classify.hpp"
#include "iccolor/plane_graph.hpp"

namespace icc {

enum class ConfigKind {
    SepCycle2,
    SepCycle3,
    LowDegree,
    NonPentagonalFive,
    SquareFiveFive,
    CloseFiveOnQuad,
    CloseSixOnQuad,
    Pentagon65,
    Pentagon66,
};

const char* to_string(ConfigKind k);

// A witness of one reducible configuration. vertices holds the bound
// vertices in a fixed role order per kind:
//   SepCycle2         [u, v]                        (plus the two edge darts)
//   SepCycle3         [u, v, w]
//   LowDegree         [v]
//   NonPentagonalFive [v, v1, v3]
//   SquareFiveFive    [v1, v2, v3, v4, w, w1]       faces: [quad]
//   CloseFiveOnQuad   [v, v1, v2, v3, v4, v3', v4', v5']   faces: [quad]
//   CloseSixOnQuad    [v, v1, v2, v3, v4, v3', v4', v5', w] faces: [quad]
//   Pentagon65        [v, v1..v5, w, w', w'']       faces: [quad at v1w', quad at v2w]
//   Pentagon66        [v, v1..v5, w, w', w'', w''', w''''] faces: same
struct ConfigurationMatch {
    ConfigKind kind;
    std::vector<VertexId> vertices;
    std::vector<int> faces;
    std::vector<Dart> darts;  // SepCycle2: one dart per parallel edge

    std::string describe() const;
};

// Re-validates every hypothesis clause of the configuration from the bound
// ids, independently of how detection found it.
bool verify_match(const PlaneGraph& g, const ConfigurationMatch& m, std::string* why = nullptr);

// -- shared structural helpers ------------------------------------------

// The face on edge (a,b) whose vertex set does not contain c; -1 when the
// edge is absent or both faces contain c.
int face_on_edge_away_from(const PlaneGraph& g, VertexId a, VertexId b, VertexId c);

// Third vertex of triangle face f besides a and b; -1 if f is not such a
// triangle.
VertexId apex_of_triangle(const PlaneGraph& g, int f, VertexId a, VertexId b);

// The vertex adjacent to w along the boundary of face f, other than skip;
// -1 when not determined uniquely.
VertexId face_neighbor(const PlaneGraph& g, int f, VertexId w, VertexId skip);

}  // namespace icc
