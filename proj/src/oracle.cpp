#include "iccolor/oracle.hpp"

#include <algorithm>

namespace icc {

namespace {

struct Solver {
    const std::vector<std::vector<VertexId>>& adj;
    const std::vector<VertexId>& verts;
    int k;
    std::vector<int> color;      // by vertex id, 0 = unset
    std::vector<int> forbid;     // bitmask of neighbor colors, by vertex id
    std::int64_t nodes = 0;

    bool solve(int assigned) {
        ++nodes;
        if (assigned == (int)verts.size()) return true;
        // most constrained uncolored vertex, lowest id first
        VertexId pick = -1;
        int best = -1;
        for (VertexId v : verts) {
            if (color[v]) continue;
            int cnt = __builtin_popcount(forbid[v]);
            if (cnt > best) {
                best = cnt;
                pick = v;
            }
        }
        if (__builtin_popcount(forbid[pick]) >= k) return false;
        for (int c = 1; c <= k; ++c) {
            if (forbid[pick] & (1 << c)) continue;
            color[pick] = c;
            std::vector<VertexId> bumped;
            bool dead = false;
            for (VertexId u : adj[pick]) {
                if (color[u]) continue;
                if (!(forbid[u] & (1 << c))) {
                    forbid[u] |= 1 << c;
                    bumped.push_back(u);
                    if (__builtin_popcount(forbid[u]) >= k) dead = true;
                }
            }
            if (!dead && solve(assigned + 1)) return true;
            for (VertexId u : bumped) forbid[u] &= ~(1 << c);
            color[pick] = 0;
        }
        return false;
    }
};

}  // namespace

OracleResult oracle_color(const PlaneGraph& g, int k, int max_n) {
    if (g.n_vertices() > max_n)
        throw invalid_input_error("oracle size guard: " + std::to_string(g.n_vertices()) +
                                  " vertices exceeds limit " + std::to_string(max_n));
    if (k < 1 || k > 30) throw invalid_input_error("oracle supports 1 <= k <= 30");
    auto adj = cyclic_adjacency(g);
    auto verts = g.vertices();
    int cap = verts.empty() ? 0 : verts.back() + 1;
    if ((int)adj.size() < cap) adj.resize(cap);
    Solver s{adj, verts, k, std::vector<int>(cap, 0), std::vector<int>(cap, 0), 0};
    OracleResult res;
    res.feasible = !verts.empty() ? s.solve(0) : true;
    res.nodes = s.nodes;
    if (res.feasible) {
        res.witness.palette_size = k;
        for (VertexId v : verts) res.witness.set(v, s.color[v]);
        ICC_CHECK(is_valid_cyclic_coloring(g, res.witness), "oracle witness invalid");
    }
    return res;
}

}  // namespace icc
