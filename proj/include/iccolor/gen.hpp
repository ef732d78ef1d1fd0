#pragma once

#include <cstdint>
#include <string>

#include "iccolor/pg_io.hpp"

namespace icc {

enum class GenMode { Triangulation, WithQuads, ICDrawing };

GenMode parse_gen_mode(const std::string& s);

struct GenSpec {
    int n = 10;                // target vertex count (>= 4)
    int quads = 0;             // target number of vertex-disjoint 4-faces
    std::uint64_t seed = 1;
    GenMode mode = GenMode::Triangulation;
};

// Deterministic for a fixed spec. Triangulation mode grows from a
// tetrahedron by random face splits plus random diagonal flips; with-quads
// mode then deletes edges whose two triangles merge into vertex-disjoint
// quadrilaterals; ic-drawing mode re-inserts each quad's crossing pair as a
// flagged dummy vertex. Throws infeasible_error (with the achieved count)
// when the quad budget cannot be met.
PlaneGraph gen_instance(const GenSpec& spec);
ICDrawing gen_drawing(const GenSpec& spec);  // mode must be ICDrawing

// Plain triangulation with `count` vertex-disjoint big faces carved by
// deleting vertices of degree `face_size` whose closed neighborhoods are
// disjoint. Used by the degeneracy-coloring corpus. Throws infeasible_error
// when no suitable vertices exist.
PlaneGraph gen_with_big_faces(int n, int count, int face_size, std::uint64_t seed);

}  // namespace icc
