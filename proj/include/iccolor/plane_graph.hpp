#pragma once

#include <utility>
#include <vector>

#include "iccolor/types.hpp"

namespace icc {

struct Face {
    std::vector<Dart> boundary;  // darts in walk order
    int size() const { return (int)boundary.size(); }
};

// Plane multigraph stored as a rotation system on darts. Darts come in twin
// pairs (2e, 2e+1). Each vertex owns the counterclockwise cyclic order of its
// outgoing darts. Faces are always derived, never stored on disk.
//
// Face tracing convention, used everywhere: next(d) = rotate_after(twin(d)),
// where rotate_after(x) is the dart following x in the rotation at origin(x).
class PlaneGraph {
public:
    PlaneGraph() = default;

    // Builds from per-vertex neighbor lists in rotation order. Parallel edges
    // pair up by occurrence index (i-th mention of w at u matches the i-th
    // mention of u at w); loops pair consecutive self-mentions.
    static PlaneGraph from_neighbor_lists(
        const std::vector<std::pair<VertexId, std::vector<VertexId>>>& rows);

    // Builds from a closed face list (each edge on exactly two faces). Face
    // orientations may be inconsistent; they are aligned automatically.
    // Only simple complexes are supported.
    static PlaneGraph from_faces(const std::vector<std::vector<VertexId>>& face_walks);

    // Raw builder for tests that need explicit dart pairing (multigraphs).
    static PlaneGraph from_raw(std::vector<VertexId> origin_per_dart,
                               std::vector<std::vector<Dart>> rotations);

    // -- basic accessors ------------------------------------------------
    int n_vertices() const { return n_vertices_; }
    int n_edges() const { return n_edges_; }
    int n_faces() const { return (int)faces_.size(); }
    int n_components() const { return n_components_; }

    bool has_vertex(VertexId v) const {
        return v >= 0 && v < (int)alive_.size() && alive_[v];
    }
    std::vector<VertexId> vertices() const;  // alive ids, ascending
    int degree(VertexId v) const { return (int)rot_[v].size(); }
    const std::vector<Dart>& rotation(VertexId v) const { return rot_[v]; }
    std::vector<VertexId> neighbors(VertexId v) const;  // heads, rotation order
    bool adjacent(VertexId u, VertexId w) const;
    VertexId origin(Dart d) const { return origin_[d]; }
    VertexId head(Dart d) const { return origin_[twin(d)]; }
    bool dart_alive(Dart d) const {
        return d >= 0 && d < (int)origin_.size() && origin_[d] >= 0;
    }
    int dart_limit() const { return (int)origin_.size(); }

    // Finds a dart u->w (lowest dart id); -1 when not adjacent.
    Dart dart_between(VertexId u, VertexId w) const;

    // -- faces -----------------------------------------------------------
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int f) const { return faces_[f]; }
    int face_of(Dart d) const { return face_of_[d]; }
    std::vector<VertexId> face_vertices(int f) const;          // distinct, ascending
    std::vector<int> faces_of_vertex(VertexId v) const;        // distinct, ascending
    std::vector<int> common_faces(VertexId u, VertexId w) const;
    bool face_has_edge(int f, VertexId u, VertexId w) const;   // as boundary edge

    Dart rotate_after(Dart d) const;    // next dart CCW at origin(d)
    Dart rotate_before(Dart d) const;
    Dart next_in_face(Dart d) const { return rotate_after(twin(d)); }

    // Retraces all faces and recounts components. Called by every surgery;
    // call manually after raw mutation.
    void retrace();
    // True when every connected component satisfies V - E + F = 2.
    bool is_sphere() const;

    // -- surgeries -------------------------------------------------------
    // All surgeries retrace before returning and keep dart/vertex ids of
    // untouched elements stable.

    void delete_vertex(VertexId v);
    void delete_edge_of_dart(Dart d);

    // Inserts a chord between the corners at darts cu and cw, which must lie
    // on one face. Returns the new dart origin(cu) -> origin(cw).
    // Does not retrace (used in surgery loops); callers retrace.
    Dart add_chord_raw(Dart cu, Dart cw);

    // Splits face f by an edge between the first corners of u and w.
    Dart add_edge_in_face(int f, VertexId u, VertexId w);

    // Merges the listed vertices into one (the minimum id), one pair at a
    // time through a shared face. Parallel edges that come to bound a 2-face
    // are suppressed immediately. Returns the surviving id.
    VertexId identify_vertices(const std::vector<VertexId>& group);

    // Fan triangulation from the lowest-id boundary vertex.
    void triangulate_face(int f);

    // Diagonal flip of the edge at dart d when its two faces are distinct
    // triangles and the flip keeps the graph simple with minimum degree 3.
    // Returns false (and leaves the graph untouched) otherwise.
    bool flip_edge(Dart d);

    // Removes the higher-id edge of a 2-face bounded by two distinct edges.
    void suppress_2face(int f);
    void suppress_all_2faces();

    // Adds a new vertex inside face f joined to every corner; the face is
    // replaced by |f| triangles. Returns the new vertex id.
    VertexId star_face(int f);

    // Component ids (by vertex), -1 for dead vertices.
    std::vector<int> component_ids() const;

    // Structural self-check for tests; throws internal_error on corruption.
    void verify_structure() const;

private:
    VertexId ensure_vertex(VertexId v);
    Dart new_dart_pair(VertexId u, VertexId w);  // returns dart u->w
    void free_dart_pair(Dart d);
    void erase_from_rotation(Dart d);
    // Merges head(chord) into origin(chord) by contracting the chord edge.
    void contract_chord(Dart chord);
    Dart trace_next_unused(std::vector<char>& used, Dart start) const;

    std::vector<VertexId> origin_;          // per dart; -1 = dead slot
    std::vector<std::vector<Dart>> rot_;    // per vertex id
    std::vector<char> alive_;               // per vertex id
    std::vector<int> free_pairs_;           // reusable even dart ids

    std::vector<Face> faces_;               // derived
    std::vector<int> face_of_;              // per dart; -1 dead
    int n_vertices_ = 0;
    int n_edges_ = 0;
    int n_components_ = 0;
};

}  // namespace icc
