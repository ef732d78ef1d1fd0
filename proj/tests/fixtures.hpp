#pragma once

#include "iccolor/pg_io.hpp"
#include "iccolor/plane_graph.hpp"

namespace icc::fixtures {

// Closes a partial oriented complex whose unmatched edges form one simple
// cycle: adds an antiprism ring (one new vertex per boundary edge) and an
// apex fan. Every added face is a triangle; each boundary vertex gains two
// ring neighbors. Returns the completed face list.
std::vector<std::vector<VertexId>> with_collar(std::vector<std::vector<VertexId>> faces,
                                               VertexId first_new_id);

PlaneGraph tetrahedron();          // hand-written rotation lists
PlaneGraph cube();                 // hand-written rotation lists, 6 quads
PlaneGraph octahedron();
PlaneGraph icosahedron();
PlaneGraph prism_k3();             // 2 triangles + 3 quads sharing vertices
PlaneGraph pentagon_pyramid();     // 5-wheel: pentagon face + apex

// Degree-5 hub, all hub faces triangles, each hub neighbor on its own
// vertex-disjoint distant 4-face; hub is solitary pentagonal.
PlaneGraph pinwheel();

// 4-face with two adjacent degree-5 vertices plus the flank structure.
// Binding order: v1=1, v2=2, v3=3, v4=4, w=5, w1=6.
PlaneGraph square55_host();

// Pentagonal v=0 with a close 4-face on edge (1,2); deg(1) is 5 (six=false)
// or 6 (six=true). Ring: 1,2,3,4,5. Quad corners: v3=6, v4=7.
PlaneGraph close_host(bool six);

// Pentagonal v=0 with the two-quad structure around v1=1 of degree 6 and
// common neighbor w=6 of degree 5 (65) or 6 (66).
PlaneGraph pentagon65_host();
PlaneGraph pentagon66_host();

// Degree-4 vertex 0 on a 4-face (cyclic degree 5).
PlaneGraph lowdegree_quad_host();

// Pentagonal v=0 whose neighbor 1 (degree 7) lies on a distant 4-face
// containing neither wing: vertex 1 is double-sided.
PlaneGraph doublesided_host();

// Pentagonal v=0 whose neighbor 1 (degree 5) lies on a distant 4-face
// containing both wings.
PlaneGraph degfive_host();

// Two vertices joined by two parallel edges separating vertex 2 from 3.
PlaneGraph sepcycle2_host();

// Octahedron plus a vertex joined to the three corners of one face.
PlaneGraph octahedron_apex();

// K5 drawn with a single crossing; dummy vertex 5 crosses edges (0,1),(3,4).
ICDrawing k5_drawing();

}  // namespace icc::fixtures
