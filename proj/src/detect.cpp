#include "iccolor/detect.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace icc {

namespace {

using Sink = std::vector<ConfigurationMatch>;

// Each scanner appends matches in its own deterministic order and returns
// early when first_only and something was found.

bool scan_sepcycle2(const PlaneGraph& g, Sink& out, bool first_only) {
    std::map<std::pair<VertexId, VertexId>, std::vector<Dart>> pairs;
    for (VertexId u : g.vertices())
        for (Dart d : g.rotation(u)) {
            VertexId w = g.head(d);
            if (u < w) pairs[{u, w}].push_back(d);
        }
    bool found = false;
    for (auto& [uw, darts] : pairs) {
        if (darts.size() < 2) continue;
        std::sort(darts.begin(), darts.end());
        // skip combinations bounding a common 2-face (suppressible, not separating)
        for (size_t i = 0; i < darts.size() && !(first_only && found); ++i)
            for (size_t j = i + 1; j < darts.size(); ++j) {
                ConfigurationMatch m;
                m.kind = ConfigKind::SepCycle2;
                m.vertices = {uw.first, uw.second};
                m.darts = {darts[i], darts[j]};
                if (!verify_match(g, m)) continue;
                out.push_back(std::move(m));
                found = true;
                if (first_only) return true;
            }
    }
    return found;
}

bool scan_sepcycle3(const PlaneGraph& g, Sink& out, bool first_only) {
    std::set<std::vector<VertexId>> face_triangles;
    for (int f = 0; f < g.n_faces(); ++f)
        if (g.face(f).size() == 3) face_triangles.insert(g.face_vertices(f));
    auto vs = g.vertices();
    std::vector<std::vector<VertexId>> nbr;
    nbr.resize(vs.empty() ? 0 : vs.back() + 1);
    for (VertexId v : vs) {
        auto n = g.neighbors(v);
        std::sort(n.begin(), n.end());
        n.erase(std::unique(n.begin(), n.end()), n.end());
        nbr[v] = std::move(n);
    }
    bool found = false;
    for (VertexId u : vs) {
        for (VertexId w : nbr[u]) {
            if (w <= u) continue;
            for (VertexId z : nbr[u]) {
                if (z <= w) continue;
                if (!std::binary_search(nbr[w].begin(), nbr[w].end(), z)) continue;
                std::vector<VertexId> key = {u, w, z};
                if (face_triangles.count(key)) continue;
                ConfigurationMatch m;
                m.kind = ConfigKind::SepCycle3;
                m.vertices = key;
                out.push_back(std::move(m));
                found = true;
                if (first_only) return true;
            }
        }
    }
    return found;
}

bool scan_lowdegree(const PlaneGraph& g, Sink& out, bool first_only) {
    bool found = false;
    for (VertexId v : g.vertices())
        if (g.degree(v) <= 4) {
            out.push_back({ConfigKind::LowDegree, {v}, {}, {}});
            found = true;
            if (first_only) return true;
        }
    return found;
}

struct QuadIncidence {
    std::vector<int> quad_of;  // vertex -> a 4-face id or -1
    std::vector<char> pentagonal;
};

QuadIncidence quad_incidence(const PlaneGraph& g) {
    QuadIncidence qi;
    int cap = g.dart_limit();
    for (VertexId v : g.vertices()) cap = std::max(cap, v + 1);
    qi.quad_of.assign(cap, -1);
    qi.pentagonal.assign(cap, 0);
    for (int f = 0; f < g.n_faces(); ++f) {
        if (g.face(f).size() != 4) continue;
        for (VertexId v : g.face_vertices(f))
            if (qi.quad_of[v] < 0) qi.quad_of[v] = f;
    }
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 5 || qi.quad_of[v] >= 0) continue;
        bool all = true;
        for (VertexId w : g.neighbors(v))
            if (qi.quad_of[w] < 0) {
                all = false;
                break;
            }
        qi.pentagonal[v] = all;
    }
    return qi;
}

bool scan_nonpentagonal_five(const PlaneGraph& g, const QuadIncidence& qi, Sink& out,
                             bool first_only) {
    bool found = false;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 5 || qi.quad_of[v] >= 0) continue;
        auto nbrs = g.neighbors(v);
        VertexId v1 = -1;
        for (VertexId u : nbrs)
            if (qi.quad_of[u] < 0 && (v1 < 0 || u < v1)) v1 = u;
        if (v1 < 0) continue;  // pentagonal
        int pos = -1;
        for (size_t i = 0; i < nbrs.size(); ++i)
            if (nbrs[i] == v1) pos = (int)i;
        VertexId v3 = nbrs[(pos + 2) % 5];
        if (g.adjacent(v1, v3)) v3 = nbrs[(pos + 3) % 5];
        ConfigurationMatch m{ConfigKind::NonPentagonalFive, {v, v1, v3}, {}, {}};
        if (!verify_match(g, m)) continue;
        out.push_back(std::move(m));
        found = true;
        if (first_only) return true;
    }
    return found;
}

bool scan_square55(const PlaneGraph& g, Sink& out, bool first_only) {
    bool found = false;
    for (int f = 0; f < g.n_faces(); ++f) {
        if (g.face(f).size() != 4) continue;
        std::vector<VertexId> walk;
        for (Dart d : g.face(f).boundary) walk.push_back(g.origin(d));
        for (int i = 0; i < 4; ++i) {
            VertexId v1 = walk[i], v2 = walk[(i + 1) % 4];
            if (g.degree(v1) != 5 || g.degree(v2) != 5) continue;
            VertexId v3 = walk[(i + 2) % 4], v4 = walk[(i + 3) % 4];
            int tf = face_on_edge_away_from(g, v1, v2, v3);
            if (tf < 0) continue;
            VertexId w = apex_of_triangle(g, tf, v1, v2);
            if (w < 0) continue;
            int tf2 = face_on_edge_away_from(g, v1, w, v2);
            if (tf2 < 0) continue;
            VertexId w1 = apex_of_triangle(g, tf2, v1, w);
            if (w1 < 0) continue;
            ConfigurationMatch m{ConfigKind::SquareFiveFive, {v1, v2, v3, v4, w, w1}, {f}, {}};
            if (!verify_match(g, m)) continue;
            out.push_back(std::move(m));
            found = true;
            if (first_only) return true;
        }
    }
    return found;
}

bool scan_close_on_quad(const PlaneGraph& g, const QuadIncidence& qi, int want_degree, Sink& out,
                        bool first_only) {
    bool found = false;
    ConfigKind kind =
        want_degree == 5 ? ConfigKind::CloseFiveOnQuad : ConfigKind::CloseSixOnQuad;
    for (VertexId v : g.vertices()) {
        if (!qi.pentagonal[v]) continue;
        auto nbrs = g.neighbors(v);
        int deg = (int)nbrs.size();
        for (int j = 0; j < deg; ++j)
            for (int dir : {+1, -1}) {
                VertexId v1 = nbrs[j], v2 = nbrs[(j + dir + deg) % deg];
                if (g.degree(v1) != want_degree) continue;
                int f = face_on_edge_away_from(g, v1, v2, v);
                if (f < 0 || g.face(f).size() != 4) continue;
                VertexId v3 = face_neighbor(g, f, v2, v1);
                VertexId v4 = face_neighbor(g, f, v1, v2);
                if (v3 < 0 || v4 < 0) continue;
                std::vector<VertexId> bind = {v, v1, v2, v3, v4, nbrs[(j + 2 * dir + 2 * deg) % deg],
                                              nbrs[(j + 3 * dir + 2 * deg) % deg],
                                              nbrs[(j + 4 * dir + 2 * deg) % deg]};
                if (want_degree == 6) {
                    int tf = face_on_edge_away_from(g, v1, bind[7], v);
                    if (tf < 0) continue;
                    VertexId w = apex_of_triangle(g, tf, v1, bind[7]);
                    if (w < 0) continue;
                    bind.push_back(w);
                }
                ConfigurationMatch m{kind, bind, {f}, {}};
                if (!verify_match(g, m)) continue;
                out.push_back(std::move(m));
                found = true;
                if (first_only) return true;
            }
    }
    return found;
}

bool scan_pentagon6x(const PlaneGraph& g, const QuadIncidence& qi, int w_degree, Sink& out,
                     bool first_only) {
    bool found = false;
    ConfigKind kind = w_degree == 5 ? ConfigKind::Pentagon65 : ConfigKind::Pentagon66;
    for (VertexId v : g.vertices()) {
        if (!qi.pentagonal[v]) continue;
        auto nbrs = g.neighbors(v);
        int deg = (int)nbrs.size();
        for (int j = 0; j < deg; ++j)
            for (int dir : {+1, -1}) {
                auto at = [&](int k) { return nbrs[(j + dir * k + 5 * deg) % deg]; };
                VertexId v1 = at(0), v2 = at(1);
                if (g.degree(v1) != 6) continue;
                int tf = face_on_edge_away_from(g, v1, v2, v);
                if (tf < 0) continue;
                VertexId w = apex_of_triangle(g, tf, v1, v2);
                if (w < 0 || g.degree(w) != w_degree) continue;
                int tf2 = face_on_edge_away_from(g, v1, w, v2);
                if (tf2 < 0) continue;
                VertexId wp = apex_of_triangle(g, tf2, v1, w);
                if (wp < 0) continue;
                int q1 = face_on_edge_away_from(g, v1, wp, w);
                if (q1 < 0 || g.face(q1).size() != 4) continue;
                int qw = face_on_edge_away_from(g, v2, w, v1);
                if (qw < 0 || g.face(qw).size() != 4) continue;
                std::vector<VertexId> bind = {v, v1, v2, at(2), at(3), at(4), w, wp};
                if (w_degree == 5) {
                    VertexId wpp = face_neighbor(g, qw, w, v2);
                    if (wpp < 0) continue;
                    bind.push_back(wpp);
                } else {
                    int t3 = face_on_edge_away_from(g, w, wp, v1);
                    if (t3 < 0) continue;
                    VertexId wpp = apex_of_triangle(g, t3, w, wp);
                    if (wpp < 0) continue;
                    int t4 = face_on_edge_away_from(g, w, wpp, wp);
                    if (t4 < 0) continue;
                    VertexId wppp = apex_of_triangle(g, t4, w, wpp);
                    if (wppp < 0) continue;
                    VertexId wpppp = face_neighbor(g, qw, w, v2);
                    if (wpppp < 0) continue;
                    bind.push_back(wpp);
                    bind.push_back(wppp);
                    bind.push_back(wpppp);
                }
                ConfigurationMatch m{kind, bind, {q1, qw}, {}};
                if (!verify_match(g, m)) continue;
                out.push_back(std::move(m));
                found = true;
                if (first_only) return true;
            }
    }
    return found;
}

void scan_all(const PlaneGraph& g, Sink& out, bool first_only) {
    if (scan_sepcycle2(g, out, first_only) && first_only) return;
    if (scan_sepcycle3(g, out, first_only) && first_only) return;
    if (scan_lowdegree(g, out, first_only) && first_only) return;
    QuadIncidence qi = quad_incidence(g);
    if (scan_nonpentagonal_five(g, qi, out, first_only) && first_only) return;
    if (scan_square55(g, out, first_only) && first_only) return;
    if (scan_close_on_quad(g, qi, 5, out, first_only) && first_only) return;
    if (scan_close_on_quad(g, qi, 6, out, first_only) && first_only) return;
    if (scan_pentagon6x(g, qi, 5, out, first_only) && first_only) return;
    if (scan_pentagon6x(g, qi, 6, out, first_only) && first_only) return;
}

}  // namespace

std::optional<ConfigurationMatch> find_configuration(const PlaneGraph& g) {
    Sink out;
    scan_all(g, out, true);
    if (out.empty()) return std::nullopt;
    return out.front();
}

std::vector<ConfigurationMatch> find_all_configurations(const PlaneGraph& g) {
    Sink out;
    scan_all(g, out, false);
    return out;
}

}  // namespace icc
