#include "iccolor/classify.hpp"

#include <algorithm>
#include <set>

namespace icc {

std::vector<VertexId> cyclic_neighbors(const PlaneGraph& g, VertexId v) {
    if (!g.has_vertex(v)) throw invalid_input_error("unknown vertex " + std::to_string(v));
    std::set<VertexId> out;
    for (int f : g.faces_of_vertex(v))
        for (VertexId u : g.face_vertices(f))
            if (u != v) out.insert(u);
    return {out.begin(), out.end()};
}

int cyclic_degree(const PlaneGraph& g, VertexId v) {
    return (int)cyclic_neighbors(g, v).size();
}

std::map<VertexId, VertexClass> classify(const PlaneGraph& g) {
    std::map<VertexId, VertexClass> out;
    for (VertexId v : g.vertices()) {
        VertexClass c;
        c.degree = g.degree(v);
        for (int f : g.faces_of_vertex(v))
            if (g.face(f).size() == 4) c.incident_4faces.push_back(f);
        out.emplace(v, std::move(c));
    }
    for (auto& [v, c] : out) {
        if (c.degree != 5 || !c.incident_4faces.empty()) continue;
        bool all_on_quads = true;
        for (VertexId w : g.neighbors(v))
            if (out.at(w).incident_4faces.empty()) {
                all_on_quads = false;
                break;
            }
        c.pentagonal = all_on_quads;
        if (c.pentagonal) {
            c.solitary = true;
            for (VertexId w : g.neighbors(v))
                for (int f : out.at(w).incident_4faces)
                    if (face_proximity(g, v, f) == Proximity::Close) c.solitary = false;
        }
    }
    return out;
}

Proximity face_proximity(const PlaneGraph& g, VertexId v, int f) {
    if (g.face(f).size() != 4) throw invalid_input_error("face is not a 4-face");
    auto nbrs = g.neighbors(v);
    auto fverts = g.face_vertices(f);
    bool touches = false;
    for (VertexId w : nbrs)
        if (std::binary_search(fverts.begin(), fverts.end(), w)) touches = true;
    if (!touches) throw invalid_input_error("4-face not incident with any neighbor of v");
    for (size_t i = 0; i < nbrs.size(); ++i) {
        VertexId a = nbrs[i], b = nbrs[(i + 1) % nbrs.size()];
        if (g.face_has_edge(f, a, b)) return Proximity::Close;
    }
    return Proximity::Distant;
}

int unique_4face(const PlaneGraph& g, VertexId v) {
    int found = -1;
    for (int f : g.faces_of_vertex(v)) {
        if (g.face(f).size() != 4) continue;
        ICC_CHECK(found < 0, "vertex lies on two 4-faces");
        found = f;
    }
    return found;
}

Sidedness sidedness(const PlaneGraph& g, VertexId v, VertexId w) {
    int f = unique_4face(g, w);
    if (f < 0) throw invalid_input_error("neighbor lies on no 4-face");
    if (face_proximity(g, v, f) == Proximity::Close)
        throw invalid_input_error("sidedness is defined for distant 4-faces only");
    const auto& rot = g.rotation(v);
    int pos = -1;
    for (size_t i = 0; i < rot.size(); ++i)
        if (g.head(rot[i]) == w) pos = (int)i;
    if (pos < 0) throw invalid_input_error("w is not a neighbor of v");
    auto fverts = g.face_vertices(f);
    int wings_on_face = 0;
    for (int dir : {-1, +1}) {
        VertexId p = g.head(rot[(pos + dir + rot.size()) % rot.size()]);
        // wing: the third vertex of the face on edge (w,p) away from v
        Dart d = g.dart_between(w, p);
        ICC_CHECK(d >= 0, "consecutive neighbors of a pentagonal vertex must be adjacent");
        int f1 = g.face_of(d), f2 = g.face_of(twin(d));
        auto third = [&](int fi) -> VertexId {
            ICC_CHECK(g.face(fi).size() == 3, "flanking face of a distant neighbor not a triangle");
            for (VertexId u : g.face_vertices(fi))
                if (u != w && u != p) return u;
            ICC_CHECK(false, "degenerate triangle");
            return -1;
        };
        auto has_v = [&](int fi) {
            auto fv = g.face_vertices(fi);
            return std::binary_search(fv.begin(), fv.end(), v);
        };
        VertexId wing;
        if (has_v(f1) && !has_v(f2)) wing = third(f2);
        else if (has_v(f2) && !has_v(f1)) wing = third(f1);
        else {
            ICC_CHECK(false, "edge (w, p) must flank exactly one face at v");
            wing = -1;
        }
        if (std::binary_search(fverts.begin(), fverts.end(), wing)) ++wings_on_face;
    }
    switch (wings_on_face) {
        case 2: return Sidedness::DegreeFiveCase;
        case 1: return Sidedness::OneSided;
        default: return Sidedness::DoubleSided;
    }
}

}  // namespace icc
