#include "iccolor/configuration.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace icc {

const char* to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::SepCycle2: return "SepCycle2";
        case ConfigKind::SepCycle3: return "SepCycle3";
        case ConfigKind::LowDegree: return "LowDegree";
        case ConfigKind::NonPentagonalFive: return "NonPentagonalFive";
        case ConfigKind::SquareFiveFive: return "SquareFiveFive";
        case ConfigKind::CloseFiveOnQuad: return "CloseFiveOnQuad";
        case ConfigKind::CloseSixOnQuad: return "CloseSixOnQuad";
        case ConfigKind::Pentagon65: return "Pentagon65";
        case ConfigKind::Pentagon66: return "Pentagon66";
    }
    return "?";
}

std::string ConfigurationMatch::describe() const {
    std::ostringstream os;
    os << to_string(kind) << " bind=";
    for (size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
    return os.str();
}

int face_on_edge_away_from(const PlaneGraph& g, VertexId a, VertexId b, VertexId c) {
    Dart d = g.dart_between(a, b);
    if (d < 0) return -1;
    int f1 = g.face_of(d), f2 = g.face_of(twin(d));
    auto contains = [&](int f) {
        auto vs = g.face_vertices(f);
        return std::binary_search(vs.begin(), vs.end(), c);
    };
    bool c1 = contains(f1), c2 = contains(f2);
    if (c1 && !c2) return f2;
    if (c2 && !c1) return f1;
    return -1;
}

VertexId apex_of_triangle(const PlaneGraph& g, int f, VertexId a, VertexId b) {
    if (g.face(f).size() != 3) return -1;
    auto vs = g.face_vertices(f);
    if (vs.size() != 3) return -1;
    VertexId third = -1;
    bool has_a = false, has_b = false;
    for (VertexId v : vs) {
        if (v == a) has_a = true;
        else if (v == b) has_b = true;
        else third = v;
    }
    return (has_a && has_b) ? third : -1;
}

VertexId face_neighbor(const PlaneGraph& g, int f, VertexId w, VertexId skip) {
    VertexId found = -1;
    for (Dart d : g.face(f).boundary) {
        VertexId a = g.origin(d), b = g.head(d);
        VertexId other = -1;
        if (a == w) other = b;
        else if (b == w) other = a;
        else continue;
        if (other == skip) continue;
        if (found >= 0 && found != other) return -1;
        found = other;
    }
    return found;
}

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

// Shared clause checks for the pentagonal-vertex configurations: v is
// pentagonal, (v1, v2) are rotation-consecutive neighbors of v, and
// v3'..v5' (when bound) continue around v in the same direction.
bool check_pentagonal_ring(const PlaneGraph& g, VertexId v,
                           const std::vector<VertexId>& ring, std::string* why) {
    if (!g.has_vertex(v)) return fail(why, "absent vertex");
    if (g.degree(v) != 5) return fail(why, "v does not have degree 5");
    for (int f : g.faces_of_vertex(v))
        if (g.face(f).size() != 3) return fail(why, "v lies on a non-triangle");
    auto quad_of = [&](VertexId u) {
        for (int f : g.faces_of_vertex(u))
            if (g.face(f).size() == 4) return f;
        return -1;
    };
    for (VertexId u : g.neighbors(v))
        if (quad_of(u) < 0) return fail(why, "a neighbor of v lies on no 4-face");
    // ring must be the rotation order of v's neighbors in some direction/start
    auto nbrs = g.neighbors(v);
    if (ring.size() != nbrs.size()) return fail(why, "ring size mismatch");
    for (int dir : {+1, -1}) {
        for (size_t s = 0; s < nbrs.size(); ++s) {
            bool ok = true;
            for (size_t i = 0; i < ring.size(); ++i)
                if (ring[i] != nbrs[(s + dir * i + 5 * nbrs.size()) % nbrs.size()]) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
    }
    return fail(why, "ring is not the rotation order at v");
}

}  // namespace

bool verify_match(const PlaneGraph& g, const ConfigurationMatch& m, std::string* why) {
    const auto& V = m.vertices;
    for (VertexId v : V)
        if (!g.has_vertex(v)) return fail(why, "bound vertex absent");
    switch (m.kind) {
        case ConfigKind::SepCycle2: {
            if (V.size() != 2 || m.darts.size() != 2) return fail(why, "bad binding");
            for (Dart d : m.darts) {
                if (!g.dart_alive(d)) return fail(why, "bound dart dead");
                VertexId a = g.origin(d), b = g.head(d);
                if (std::minmax(a, b) != std::minmax(V[0], V[1]))
                    return fail(why, "dart does not join the bound pair");
            }
            if (edge_of(m.darts[0]) == edge_of(m.darts[1]))
                return fail(why, "needs two distinct parallel edges");
            // separating: the two edges do not bound a common 2-face
            int fa1 = g.face_of(m.darts[0]), fa2 = g.face_of(twin(m.darts[0]));
            for (int f : {fa1, fa2}) {
                if (g.face(f).size() != 2) continue;
                for (Dart d : g.face(f).boundary)
                    if (edge_of(d) == edge_of(m.darts[1])) return fail(why, "pair bounds a 2-face");
            }
            return true;
        }
        case ConfigKind::SepCycle3: {
            if (V.size() != 3) return fail(why, "bad binding");
            if (!(g.adjacent(V[0], V[1]) && g.adjacent(V[1], V[2]) && g.adjacent(V[0], V[2])))
                return fail(why, "not a triangle");
            std::vector<VertexId> key(V);
            std::sort(key.begin(), key.end());
            for (int f = 0; f < g.n_faces(); ++f)
                if (g.face(f).size() == 3 && g.face_vertices(f) == key)
                    return fail(why, "triangle bounds a face");
            return true;
        }
        case ConfigKind::LowDegree: {
            if (V.size() != 1) return fail(why, "bad binding");
            if (g.degree(V[0]) > 4) return fail(why, "degree above 4");
            return true;
        }
        case ConfigKind::NonPentagonalFive: {
            if (V.size() != 3) return fail(why, "bad binding");
            VertexId v = V[0], v1 = V[1], v3 = V[2];
            if (g.degree(v) != 5) return fail(why, "v not of degree 5");
            for (int f : g.faces_of_vertex(v))
                if (g.face(f).size() != 3) return fail(why, "v lies on a 4-face");
            auto on_quad = [&](VertexId u) {
                for (int f : g.faces_of_vertex(u))
                    if (g.face(f).size() == 4) return true;
                return false;
            };
            if (on_quad(v1)) return fail(why, "v1 lies on a 4-face");
            auto nbrs = g.neighbors(v);
            int pos = -1;
            for (size_t i = 0; i < nbrs.size(); ++i)
                if (nbrs[i] == v1) pos = (int)i;
            if (pos < 0) return fail(why, "v1 not a neighbor of v");
            if (nbrs[(pos + 2) % 5] != v3 && nbrs[(pos + 3) % 5] != v3)
                return fail(why, "v3 not at rotation distance 2 from v1");
            if (g.adjacent(v1, v3)) return fail(why, "identified pair adjacent");
            return true;
        }
        case ConfigKind::SquareFiveFive: {
            if (V.size() != 6 || m.faces.size() != 1) return fail(why, "bad binding");
            VertexId v1 = V[0], v2 = V[1], v3 = V[2], v4 = V[3], w = V[4], w1 = V[5];
            int f = m.faces[0];
            if (f < 0 || f >= g.n_faces() || g.face(f).size() != 4)
                return fail(why, "bound face not a 4-face");
            std::vector<VertexId> key = {v1, v2, v3, v4};
            std::sort(key.begin(), key.end());
            if (g.face_vertices(f) != key) return fail(why, "face corners mismatch");
            if (!g.face_has_edge(f, v1, v2) || !g.face_has_edge(f, v2, v3) ||
                !g.face_has_edge(f, v3, v4) || !g.face_has_edge(f, v4, v1))
                return fail(why, "corner order wrong on the face");
            if (g.degree(v1) != 5 || g.degree(v2) != 5)
                return fail(why, "v1, v2 must both have degree 5");
            int tf = face_on_edge_away_from(g, v1, v2, v3);
            if (tf < 0 || tf == f) return fail(why, "no flank face on v1v2");
            if (apex_of_triangle(g, tf, v1, v2) != w) return fail(why, "w is not the v1v2 apex");
            int tf2 = face_on_edge_away_from(g, v1, w, v2);
            if (tf2 < 0) return fail(why, "no flank face on v1w");
            if (apex_of_triangle(g, tf2, v1, w) != w1) return fail(why, "w1 mismatch");
            if (g.adjacent(w, v3) || g.adjacent(w1, v4))
                return fail(why, "identified pair adjacent");
            return true;
        }
        case ConfigKind::CloseFiveOnQuad:
        case ConfigKind::CloseSixOnQuad: {
            bool six = m.kind == ConfigKind::CloseSixOnQuad;
            if (V.size() != (six ? 9u : 8u) || m.faces.size() != 1) return fail(why, "bad binding");
            VertexId v = V[0], v1 = V[1], v2 = V[2], v3 = V[3], v4 = V[4];
            VertexId v3p = V[5], v4p = V[6], v5p = V[7];
            int f = m.faces[0];
            if (!check_pentagonal_ring(g, v, {v1, v2, v3p, v4p, v5p}, why)) return false;
            if (f < 0 || f >= g.n_faces() || g.face(f).size() != 4)
                return fail(why, "bound face not a 4-face");
            if (!g.face_has_edge(f, v1, v2)) return fail(why, "close edge not on the face");
            if (face_neighbor(g, f, v2, v1) != v3 || face_neighbor(g, f, v1, v2) != v4)
                return fail(why, "quad corners mismatch");
            if (g.degree(v1) != (six ? 6 : 5)) return fail(why, "v1 degree mismatch");
            if (six) {
                VertexId w = V[8];
                int tf = face_on_edge_away_from(g, v1, v5p, v);
                if (tf < 0) return fail(why, "no flank face on v1v5'");
                if (apex_of_triangle(g, tf, v1, v5p) != w) return fail(why, "w mismatch");
                if (g.adjacent(v2, v5p) || g.adjacent(v4, w))
                    return fail(why, "identified pair adjacent");
            } else {
                if (g.adjacent(v2, v4p) || g.adjacent(v4, v5p))
                    return fail(why, "identified pair adjacent");
            }
            return true;
        }
        case ConfigKind::Pentagon65:
        case ConfigKind::Pentagon66: {
            bool six = m.kind == ConfigKind::Pentagon66;
            if (V.size() != (six ? 11u : 9u) || m.faces.size() != 2) return fail(why, "bad binding");
            VertexId v = V[0], v1 = V[1], v2 = V[2], v3 = V[3], v4 = V[4], v5 = V[5];
            VertexId w = V[6], wp = V[7];
            if (!check_pentagonal_ring(g, v, {v1, v2, v3, v4, v5}, why)) return false;
            if (g.degree(v1) != 6) return fail(why, "v1 not of degree 6");
            if (g.degree(w) != (six ? 6 : 5)) return fail(why, "w degree mismatch");
            int tf = face_on_edge_away_from(g, v1, v2, v);
            if (tf < 0 || apex_of_triangle(g, tf, v1, v2) != w)
                return fail(why, "w is not the common neighbor of v1, v2");
            int tf2 = face_on_edge_away_from(g, v1, w, v2);
            if (tf2 < 0 || apex_of_triangle(g, tf2, v1, w) != wp)
                return fail(why, "w' is not the common neighbor of v1, w");
            int q1 = face_on_edge_away_from(g, v1, wp, w);
            if (q1 < 0 || g.face(q1).size() != 4 || q1 != m.faces[0])
                return fail(why, "edge v1w' not in the bound 4-face");
            int qw = face_on_edge_away_from(g, v2, w, v1);
            if (qw < 0 || g.face(qw).size() != 4 || qw != m.faces[1])
                return fail(why, "edge v2w not in the bound 4-face");
            // identified group {v2, v5, w'} pairwise nonadjacent
            if (g.adjacent(v2, v5) || g.adjacent(v2, wp) || g.adjacent(v5, wp))
                return fail(why, "identified group has an internal edge");
            if (!six) {
                VertexId wpp = V[8];
                if (face_neighbor(g, qw, w, v2) != wpp) return fail(why, "w'' mismatch");
                if (wpp == v5 || wpp == wp || wpp == v2)
                    return fail(why, "w'' collides with the identified group");
            } else {
                VertexId wpp = V[8], wppp = V[9], wpppp = V[10];
                int t3 = face_on_edge_away_from(g, w, wp, v1);
                if (t3 < 0 || apex_of_triangle(g, t3, w, wp) != wpp)
                    return fail(why, "w'' mismatch");
                int t4 = face_on_edge_away_from(g, w, wpp, wp);
                if (t4 < 0 || apex_of_triangle(g, t4, w, wpp) != wppp)
                    return fail(why, "w''' mismatch");
                if (face_neighbor(g, qw, w, v2) != wpppp) return fail(why, "w'''' mismatch");
                int t5 = face_on_edge_away_from(g, w, wppp, wpp);
                if (t5 < 0 || apex_of_triangle(g, t5, w, wppp) != wpppp)
                    return fail(why, "w''' is not between w'' and w''''");
                if (g.adjacent(wpp, wpppp)) return fail(why, "identified pair adjacent");
            }
            return true;
        }
    }
    return fail(why, "unknown kind");
}

}  // namespace icc
