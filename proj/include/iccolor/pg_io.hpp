#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "iccolor/plane_graph.hpp"

namespace icc {

// Text format .pg:
//   pg <n> <m>
//   v <id>: <ccw neighbor id list>
// Lines starting with '#' are comments. Multi-edges are listed with
// multiplicity; the i-th mention of w at u pairs with the i-th mention of u
// at w. Faces are derived, never stored.
PlaneGraph read_pg(std::istream& in);
PlaneGraph read_pg_file(const std::string& path);
void write_pg(std::ostream& out, const PlaneGraph& g);
std::string to_pg_string(const PlaneGraph& g);

// Drawing with independent crossings: a .pg body plus one 'x <id list>' line
// flagging the crossing dummies.
struct ICDrawing {
    PlaneGraph graph;
    std::vector<VertexId> dummies;
};

ICDrawing read_icd(std::istream& in);
ICDrawing read_icd_file(const std::string& path);
void write_icd(std::ostream& out, const ICDrawing& d);

}  // namespace icc
