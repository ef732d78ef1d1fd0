#pragma once

#include <map>
#include <vector>

#include "iccolor/plane_graph.hpp"

namespace icc {

// Taxonomy of a vertex in a hypothesis-valid instance.
struct VertexClass {
    int degree = 0;
    std::vector<int> incident_4faces;  // face ids, ascending
    bool pentagonal = false;           // degree 5, no incident 4-face, every
                                       // neighbor incident with a 4-face
    bool solitary = false;             // meaningful only when pentagonal
};

enum class Proximity { Close, Distant };

// Sidedness of a neighbor w of a pentagonal vertex v, judged by which of the
// two wing vertices (common neighbors of w with the rotation-adjacent
// neighbors of v) lie on w's 4-face. Both wings on the face force deg(w)=5.
enum class Sidedness { DegreeFiveCase, OneSided, DoubleSided };

// All vertices u != v sharing a face with v. Throws on unknown vertex.
std::vector<VertexId> cyclic_neighbors(const PlaneGraph& g, VertexId v);
int cyclic_degree(const PlaneGraph& g, VertexId v);

std::map<VertexId, VertexClass> classify(const PlaneGraph& g);

// Close iff f contains a boundary edge between two rotation-consecutive
// neighbors of v. Preconditions: v pentagonal, f a 4-face incident with at
// least one neighbor of v (else invalid_input_error).
Proximity face_proximity(const PlaneGraph& g, VertexId v, int f);

// Preconditions: v pentagonal, w a neighbor of v lying on a 4-face distant
// from v (else invalid_input_error).
Sidedness sidedness(const PlaneGraph& g, VertexId v, VertexId w);

// The unique 4-face incident with v, or -1. Throws internal_error when a
// vertex lies on two 4-faces (such instances must not reach this layer).
int unique_4face(const PlaneGraph& g, VertexId v);

}  // namespace icc
