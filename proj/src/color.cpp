#include "iccolor/color.hpp"

#include <algorithm>
#include <sstream>

#include "iccolor/detect.hpp"
#include "iccolor/discharge.hpp"
#include "iccolor/oracle.hpp"
#include "iccolor/pg_io.hpp"
#include "iccolor/reduce.hpp"
#include "iccolor/validate.hpp"

namespace icc {

namespace {

constexpr int kBaseThreshold = 6;

Coloring color_rec(const PlaneGraph& g, ReductionTrace* trace, int& step) {
    if (g.n_vertices() <= kBaseThreshold) {
        OracleResult res = oracle_color(g, 5);
        if (!res.feasible) {
            std::ostringstream os;
            os << "counterexample candidate: base instance not 5-colorable\n"
               << to_pg_string(g);
            throw internal_error(os.str());
        }
        return res.witness;
    }
    auto match = find_configuration(g);
    if (!match) {
        std::ostringstream os;
        os << "counterexample candidate: no configuration found\n"
           << to_pg_string(g) << audit(g).to_string();
        throw internal_error(os.str());
    }
    Reduction red = apply_reduction(g, *match);
    if (trace) {
        std::ostringstream os;
        os << "step " << step++ << ": " << to_string(match->kind) << " bind=";
        for (size_t i = 0; i < match->vertices.size(); ++i)
            os << (i ? "," : "") << match->vertices[i];
        os << " → n=";
        for (size_t i = 0; i < red.graphs.size(); ++i)
            os << (i ? "+" : "") << red.graphs[i].n_vertices();
        trace->lines.push_back(os.str());
    }
    std::vector<Coloring> children;
    for (const PlaneGraph& sub : red.graphs) children.push_back(color_rec(sub, trace, step));
    Coloring c = extend_coloring(g, red.plan, children);
    ICC_CHECK(is_valid_cyclic_coloring(g, c), "reduction produced an invalid coloring");
    return c;
}

}  // namespace

Coloring color(const PlaneGraph& g, ReductionTrace* trace) {
    auto report = validate_hypotheses(g);
    if (!report.admissible())
        throw invalid_input_error("instance fails hypotheses:\n" + report.to_string());
    int step = 0;
    return color_rec(g, trace, step);
}

Coloring color_degenerate(const PlaneGraph& g) {
    auto report = validate_disjoint_big_faces(g);
    if (!report.admissible())
        throw invalid_input_error("instance fails big-face hypotheses:\n" + report.to_string());
    int max_face = 0;
    for (int f = 0; f < g.n_faces(); ++f) max_face = std::max(max_face, g.face(f).size());
    auto adj = cyclic_adjacency(g);
    auto alive = g.vertices();

    // smallest-last order
    std::vector<int> deg(adj.size(), -1);
    for (VertexId v : alive) deg[v] = (int)adj[v].size();
    std::vector<VertexId> order;
    std::vector<char> gone(adj.size(), 0);
    for (size_t round = 0; round < alive.size(); ++round) {
        VertexId best = -1;
        for (VertexId v : alive)
            if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
        if (deg[best] > max_face + 2)
            throw invalid_input_error("degeneracy exceeds max face size + 2");
        gone[best] = 1;
        order.push_back(best);
        for (VertexId u : adj[best])
            if (!gone[u]) --deg[u];
    }
    std::reverse(order.begin(), order.end());

    Coloring c;
    int used_max = 0;
    for (VertexId v : order) {
        std::vector<char> used(max_face + 5, 0);
        for (VertexId u : adj[v]) {
            int col = c.get(u);
            if (col > 0 && col < (int)used.size()) used[col] = 1;
        }
        int col = 1;
        while (used[col]) ++col;
        ICC_CHECK(col <= max_face + 3, "degeneracy coloring exceeded its palette");
        c.set(v, col);
        used_max = std::max(used_max, col);
    }
    c.palette_size = std::max(used_max, 1);
    for (int f = 0; f < g.n_faces(); ++f) {
        auto vs = g.face_vertices(f);
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                ICC_CHECK(c.get(vs[i]) != c.get(vs[j]), "degeneracy coloring invalid");
    }
    return c;
}

}  // namespace icc
