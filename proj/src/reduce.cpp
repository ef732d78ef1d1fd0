#include "iccolor/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "iccolor/classify.hpp"
#include "iccolor/validate.hpp"

namespace icc {

VertexId ReplayPlan::find(VertexId v) const {
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& [from, into] : merges)
            if (v == from) {
                v = into;
                moved = true;
            }
    }
    return v;
}

namespace {

ScriptEntry make_entry(const PlaneGraph& g, VertexId v,
                       std::vector<std::vector<VertexId>> groups, int uncolored) {
    ScriptEntry e;
    e.v = v;
    e.cyclic_nbrs = cyclic_neighbors(g, v);
    e.same_color_groups = std::move(groups);
    e.expected_uncolored = uncolored;
    return e;
}

void record_merge(PlaneGraph& g, ReplayPlan& plan, const std::vector<VertexId>& group) {
    VertexId keep = *std::min_element(group.begin(), group.end());
    try {
        g.identify_vertices(group);
    } catch (const invalid_input_error& e) {
        throw internal_error(std::string("reduction identification failed: ") + e.what());
    }
    for (VertexId v : group)
        if (v != keep) plan.merges.emplace_back(v, keep);
}

void check_output(const PlaneGraph& g, const ConfigurationMatch& m, int original_n) {
    auto report = validate_hypotheses(g);
    ICC_CHECK(report.admissible(),
              std::string("reduction output fails hypotheses (") + to_string(m.kind) +
                  "): " + report.to_string());
    ICC_CHECK(g.n_vertices() < original_n, "reduction did not shrink the graph");
}

// The two quad-neighbors of v on its unique 4-face, and the corner order
// around v: rotation = (s, t, u1, u2, ...) with the quad between s and t.
struct QuadCornerFrame {
    VertexId s, t;                 // quad walk passes s -> v -> t
    std::vector<VertexId> rest;    // remaining neighbors after t, rotation order
};

QuadCornerFrame quad_corner_frame(const PlaneGraph& g, VertexId v, int quad) {
    const auto& rot = g.rotation(v);
    int deg = (int)rot.size();
    for (int i = 0; i < deg; ++i) {
        // corner between rot[i] and rot[i+1] bounds face_of(twin(rot[i]))
        if (g.face_of(twin(rot[i])) != quad) continue;
        QuadCornerFrame fr;
        fr.s = g.head(rot[i]);
        fr.t = g.head(rot[(i + 1) % deg]);
        for (int k = 2; k < deg; ++k) fr.rest.push_back(g.head(rot[(i + k) % deg]));
        return fr;
    }
    ICC_CHECK(false, "vertex has no corner on the given quad");
    return {};
}

Reduction reduce_low_degree(const PlaneGraph& g0, const ConfigurationMatch& m) {
    PlaneGraph g = g0;
    ReplayPlan plan;
    plan.kind = m.kind;
    VertexId v = m.vertices[0];
    int quad = unique_4face(g, v);
    int cd = cyclic_degree(g, v);
    ICC_CHECK(cd <= 5, "LowDegree vertex with cyclic degree above 5");
    if (cd < 5) {
        // remember the quad's diagonal pair: v's two quad-neighbors must stay
        // on a common face after the hole is triangulated
        VertexId qa = -1, qb = -1;
        if (quad >= 0) {
            auto fr = quad_corner_frame(g, v, quad);
            qa = fr.s;
            qb = fr.t;
        }
        Dart marker = -1;
        for (int f : g.faces_of_vertex(v))
            for (Dart d : g.face(f).boundary)
                if (g.origin(d) != v && g.head(d) != v && (marker < 0 || d < marker)) marker = d;
        ICC_CHECK(marker >= 0, "no surviving hole dart");
        plan.script.push_back(make_entry(g, v, {}, 0));
        g.delete_vertex(v);
        int hole = g.face_of(marker);
        if (g.face(hole).size() == 2) {
            g.suppress_all_2faces();
        } else if (qa >= 0 && g.face(hole).size() > 3) {
            Dart chord = g.add_edge_in_face(hole, qa, qb);
            for (Dart side : {chord, twin(chord)}) {
                int f = g.face_of(side);
                if (g.face(f).size() > 3) g.triangulate_face(f);
            }
        } else if (g.face(hole).size() > 3) {
            g.triangulate_face(hole);
        }
    } else {
        // degree 4 with one 4-face: remove v, identify the non-adjacent pair
        ICC_CHECK(quad >= 0 && g.degree(v) == 4, "cyclic degree 5 needs degree 4 plus a quad");
        auto fr = quad_corner_frame(g, v, quad);
        VertexId t = fr.t, u1 = fr.rest[0], u2 = fr.rest[1], s = fr.s;
        // pairs {t, u2} and {s, u1}; at least one is non-adjacent
        VertexId a = t, b = u2;
        if (g.adjacent(a, b)) {
            a = s;
            b = u1;
        }
        ICC_CHECK(!g.adjacent(a, b), "both identification pairs adjacent");
        plan.script.push_back(make_entry(g, v, {{a, b}}, 0));
        g.delete_vertex(v);
        record_merge(g, plan, {a, b});
    }
    check_output(g, m, g0.n_vertices());
    Reduction r;
    r.graphs.push_back(std::move(g));
    r.plan = std::move(plan);
    return r;
}

Reduction reduce_non_pentagonal_five(const PlaneGraph& g0, const ConfigurationMatch& m) {
    PlaneGraph g = g0;
    ReplayPlan plan;
    plan.kind = m.kind;
    VertexId v = m.vertices[0], v1 = m.vertices[1], v3 = m.vertices[2];
    plan.script.push_back(make_entry(g, v, {{v1, v3}}, 0));
    g.delete_vertex(v);
    record_merge(g, plan, {v1, v3});
    check_output(g, m, g0.n_vertices());
    Reduction r;
    r.graphs.push_back(std::move(g));
    r.plan = std::move(plan);
    return r;
}

Reduction reduce_square55(const PlaneGraph& g0, const ConfigurationMatch& m) {
    PlaneGraph g = g0;
    ReplayPlan plan;
    plan.kind = m.kind;
    VertexId v1 = m.vertices[0], v2 = m.vertices[1], v3 = m.vertices[2], v4 = m.vertices[3];
    VertexId w = m.vertices[4], w1 = m.vertices[5];
    plan.script.push_back(make_entry(g, v2, {{w, v3}}, 1));
    plan.script.push_back(make_entry(g, v1, {{w, v3}, {w1, v4}}, 0));
    g.delete_vertex(v1);
    g.delete_vertex(v2);
    record_merge(g, plan, {w, v3});
    record_merge(g, plan, {w1, v4});
    check_output(g, m, g0.n_vertices());
    Reduction r;
    r.graphs.push_back(std::move(g));
    r.plan = std::move(plan);
    return r;
}

Reduction reduce_close_on_quad(const PlaneGraph& g0, const ConfigurationMatch& m) {
    PlaneGraph g = g0;
    ReplayPlan plan;
    plan.kind = m.kind;
    VertexId v = m.vertices[0], v1 = m.vertices[1], v2 = m.vertices[2], v4 = m.vertices[4];
    VertexId v4p = m.vertices[6], v5p = m.vertices[7];
    std::vector<std::vector<VertexId>> groups;
    if (m.kind == ConfigKind::CloseFiveOnQuad) {
        groups = {{v2, v4p}, {v4, v5p}};
    } else {
        VertexId w = m.vertices[8];
        groups = {{v2, v5p}, {v4, w}};
    }
    plan.script.push_back(make_entry(g, v1, groups, 1));
    plan.script.push_back(make_entry(g, v, groups, 0));
    g.delete_vertex(v);
    g.delete_vertex(v1);
    record_merge(g, plan, groups[0]);
    record_merge(g, plan, groups[1]);
    check_output(g, m, g0.n_vertices());
    Reduction r;
    r.graphs.push_back(std::move(g));
    r.plan = std::move(plan);
    return r;
}

Reduction reduce_pentagon6x(const PlaneGraph& g0, const ConfigurationMatch& m) {
    PlaneGraph g = g0;
    ReplayPlan plan;
    plan.kind = m.kind;
    VertexId v = m.vertices[0], v1 = m.vertices[1], v2 = m.vertices[2], v5 = m.vertices[5];
    VertexId w = m.vertices[6], wp = m.vertices[7];
    std::vector<VertexId> xgroup = {v2, v5, wp};
    std::vector<std::vector<VertexId>> wgroups, vgroups;
    if (m.kind == ConfigKind::Pentagon65) {
        wgroups = {xgroup};
    } else {
        wgroups = {xgroup, {m.vertices[8], m.vertices[10]}};
    }
    plan.script.push_back(make_entry(g, w, wgroups, 1));
    plan.script.push_back(make_entry(g, v1, {xgroup}, 1));
    plan.script.push_back(make_entry(g, v, {xgroup}, 0));
    g.delete_vertex(v);
    g.delete_vertex(v1);
    g.delete_vertex(w);
    record_merge(g, plan, xgroup);
    if (m.kind == ConfigKind::Pentagon65) {
        VertexId x = plan.find(v2);
        VertexId wpp = m.vertices[8];
        auto cf = g.common_faces(x, wpp);
        ICC_CHECK(!cf.empty(), "no face to carry the added edge");
        g.add_edge_in_face(cf[0], x, wpp);
    } else {
        record_merge(g, plan, {m.vertices[8], m.vertices[10]});
    }
    check_output(g, m, g0.n_vertices());
    Reduction r;
    r.graphs.push_back(std::move(g));
    r.plan = std::move(plan);
    return r;
}

}  // namespace

std::pair<PlaneGraph, PlaneGraph> split_along_cycle(const PlaneGraph& g,
                                                    const ConfigurationMatch& m) {
    // cycle edges
    std::set<int> cycle_edges;
    if (m.kind == ConfigKind::SepCycle2) {
        for (Dart d : m.darts) cycle_edges.insert(edge_of(d));
    } else {
        for (int i = 0; i < 3; ++i) {
            Dart d = g.dart_between(m.vertices[i], m.vertices[(i + 1) % 3]);
            ICC_CHECK(d >= 0, "separating triangle lost an edge");
            cycle_edges.insert(edge_of(d));
        }
    }
    // split the dual at the cycle edges
    std::vector<int> side(g.n_faces(), -1);
    for (int s = 0; s < 2; ++s) {
        int start = -1;
        for (int f = 0; f < g.n_faces() && start < 0; ++f)
            if (side[f] < 0) start = f;
        ICC_CHECK(start >= 0, "cycle does not separate the sphere");
        side[start] = s;
        std::vector<int> stack = {start};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (Dart d : g.face(f).boundary) {
                if (cycle_edges.count(edge_of(d))) continue;
                int o = g.face_of(twin(d));
                if (side[o] < 0) {
                    side[o] = s;
                    stack.push_back(o);
                }
            }
        }
    }
    for (int f = 0; f < g.n_faces(); ++f)
        ICC_CHECK(side[f] >= 0, "cycle splits the dual into more than two parts");

    auto build_side = [&](int s) {
        // keep darts whose edge borders a face on side s
        std::vector<char> keep_edge(g.dart_limit() / 2 + 1, 0);
        for (int f = 0; f < g.n_faces(); ++f) {
            if (side[f] != s) continue;
            for (Dart d : g.face(f).boundary) keep_edge[edge_of(d)] = 1;
        }
        for (int e : cycle_edges) keep_edge[e] = 1;
        int cap = 0;
        for (VertexId v : g.vertices()) cap = std::max(cap, v + 1);
        std::vector<VertexId> origin;
        std::vector<std::vector<Dart>> rot(cap);
        std::map<Dart, Dart> dart_map;
        for (VertexId v : g.vertices())
            for (Dart d : g.rotation(v)) {
                if (!keep_edge[edge_of(d)]) continue;
                Dart base = d & ~1;
                if (!dart_map.count(base)) {
                    dart_map[base] = (Dart)origin.size();
                    origin.push_back(-1);
                    origin.push_back(-1);
                }
                Dart nd = dart_map[base] | (d & 1);
                origin[nd] = v;
                rot[v].push_back(nd);
            }
        return PlaneGraph::from_raw(std::move(origin), std::move(rot));
    };
    PlaneGraph a = build_side(0), b = build_side(1);
    a.suppress_all_2faces();
    b.suppress_all_2faces();
    return {std::move(a), std::move(b)};
}

Reduction apply_reduction(const PlaneGraph& g, const ConfigurationMatch& m) {
    std::string why;
    if (!verify_match(g, m, &why))
        throw internal_error("apply_reduction on invalid match (" + m.describe() + "): " + why);
    switch (m.kind) {
        case ConfigKind::SepCycle2:
        case ConfigKind::SepCycle3: {
            auto [a, b] = split_along_cycle(g, m);
            Reduction r;
            r.plan.kind = m.kind;
            r.plan.shared_cycle = m.vertices;
            int n0 = g.n_vertices();
            ICC_CHECK(a.n_vertices() < n0 && b.n_vertices() < n0,
                      "separating cycle side not smaller");
            auto ra = validate_hypotheses(a), rb = validate_hypotheses(b);
            ICC_CHECK(ra.admissible(), "cycle side fails hypotheses: " + ra.to_string());
            ICC_CHECK(rb.admissible(), "cycle side fails hypotheses: " + rb.to_string());
            r.graphs.push_back(std::move(a));
            r.graphs.push_back(std::move(b));
            return r;
        }
        case ConfigKind::LowDegree: return reduce_low_degree(g, m);
        case ConfigKind::NonPentagonalFive: return reduce_non_pentagonal_five(g, m);
        case ConfigKind::SquareFiveFive: return reduce_square55(g, m);
        case ConfigKind::CloseFiveOnQuad:
        case ConfigKind::CloseSixOnQuad: return reduce_close_on_quad(g, m);
        case ConfigKind::Pentagon65:
        case ConfigKind::Pentagon66: return reduce_pentagon6x(g, m);
    }
    throw internal_error("unknown configuration kind");
}

Coloring extend_coloring(const PlaneGraph& original, const ReplayPlan& plan,
                         const std::vector<Coloring>& reduced_colorings) {
    constexpr int kPalette = 5;
    Coloring out;
    out.palette_size = kPalette;

    if (plan.kind == ConfigKind::SepCycle2 || plan.kind == ConfigKind::SepCycle3) {
        ICC_CHECK(reduced_colorings.size() == 2, "separating cycle needs two colorings");
        const Coloring& ca = reduced_colorings[0];
        const Coloring& cb = reduced_colorings[1];
        // permute side B's palette to agree with side A on the shared cycle
        std::vector<int> perm(kPalette + 1, 0);
        std::vector<char> used(kPalette + 1, 0);
        for (VertexId s : plan.shared_cycle) {
            int from = cb.get(s), to = ca.get(s);
            ICC_CHECK(from >= 1 && to >= 1, "shared vertex uncolored");
            ICC_CHECK(perm[from] == 0 || perm[from] == to, "shared colors not matchable");
            ICC_CHECK(!used[to] || perm[from] == to, "shared colors not injective");
            perm[from] = to;
            used[to] = 1;
        }
        for (int c = 1; c <= kPalette; ++c) {
            if (perm[c]) continue;
            for (int t = 1; t <= kPalette; ++t)
                if (!used[t]) {
                    perm[c] = t;
                    used[t] = 1;
                    break;
                }
        }
        for (VertexId v : original.vertices()) {
            int a = ca.get(v), b = cb.get(v);
            if (a >= 1) out.set(v, a);
            else {
                ICC_CHECK(b >= 1, "vertex missing from both cycle sides");
                out.set(v, perm[b]);
            }
        }
        for (VertexId s : plan.shared_cycle)
            ICC_CHECK(out.get(s) == ca.get(s), "palette permutation broke the shared cycle");
    } else {
        ICC_CHECK(reduced_colorings.size() == 1, "reduction yields one graph");
        const Coloring& c = reduced_colorings[0];
        std::set<VertexId> removed;
        for (const auto& e : plan.script) removed.insert(e.v);
        for (VertexId v : original.vertices()) {
            if (removed.count(v)) continue;
            int col = c.get(plan.find(v));
            ICC_CHECK(col >= 1, "surviving vertex uncolored in the reduced graph");
            out.set(v, col);
        }
        for (const auto& e : plan.script) {
            std::vector<char> used(kPalette + 1, 0);
            int uncolored = 0, distinct = 0;
            for (VertexId u : e.cyclic_nbrs) {
                int col = out.get(u);
                if (col == 0) ++uncolored;
                else if (!used[col]) {
                    used[col] = 1;
                    ++distinct;
                }
            }
            ICC_CHECK(uncolored == e.expected_uncolored,
                      "uncolored neighbor count differs from the plan");
            int saves = 0;
            for (const auto& grp : e.same_color_groups) {
                int present = 0;
                for (VertexId u : grp)
                    if (std::find(e.cyclic_nbrs.begin(), e.cyclic_nbrs.end(), u) !=
                        e.cyclic_nbrs.end())
                        ++present;
                saves += std::max(0, present - 1);
            }
            ICC_CHECK(distinct <= (int)e.cyclic_nbrs.size() - uncolored - saves,
                      "merged neighbors did not coincide as planned");
            ICC_CHECK(distinct < kPalette, "extension slack violated: no available color");
            for (int col = 1; col <= kPalette; ++col)
                if (!used[col]) {
                    out.set(e.v, col);
                    break;
                }
        }
    }
    ICC_CHECK(is_valid_cyclic_coloring(original, out),
              "extended coloring is not cyclic-valid");
    return out;
}

}  // namespace icc
