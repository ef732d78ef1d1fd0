#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace icc::fixtures {

namespace {

using Walks = std::vector<std::vector<VertexId>>;

// Orients a partial complex coherently (edges on one or two faces).
Walks orient_partial(Walks faces) {
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> edge_faces;
    for (int i = 0; i < (int)faces.size(); ++i) {
        const auto& w = faces[i];
        for (size_t j = 0; j < w.size(); ++j) {
            auto key = std::minmax(w[j], w[(j + 1) % w.size()]);
            edge_faces[{key.first, key.second}].push_back(i);
        }
    }
    for (auto& [e, fs] : edge_faces)
        ICC_CHECK(fs.size() <= 2, "edge on more than two faces in fixture");
    std::vector<int> state(faces.size(), 0);
    auto uses_forward = [&](int i, VertexId a, VertexId b) {
        const auto& w = faces[i];
        for (size_t j = 0; j < w.size(); ++j)
            if (w[j] == a && w[(j + 1) % w.size()] == b) return true;
        return false;
    };
    for (int start = 0; start < (int)faces.size(); ++start) {
        if (state[start]) continue;
        state[start] = 1;
        std::vector<int> stack = {start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            const auto& w = faces[i];
            for (size_t j = 0; j < w.size(); ++j) {
                VertexId a = w[j], b = w[(j + 1) % w.size()];
                auto key = std::minmax(a, b);
                const auto& fs = edge_faces[{key.first, key.second}];
                if (fs.size() != 2) continue;
                int other = fs[0] == i ? fs[1] : fs[0];
                if (other == i) continue;
                bool flip = uses_forward(other, a, b);
                if (state[other] == 0) {
                    if (flip) std::reverse(faces[other].begin(), faces[other].end());
                    state[other] = 1;
                    stack.push_back(other);
                } else {
                    ICC_CHECK(!flip, "fixture complex not orientable");
                }
            }
        }
    }
    return faces;
}

}  // namespace

Walks with_collar(Walks faces, VertexId first_new_id) {
    faces = orient_partial(faces);
    std::set<std::pair<VertexId, VertexId>> used;
    for (const auto& w : faces)
        for (size_t j = 0; j < w.size(); ++j)
            ICC_CHECK(used.insert({w[j], w[(j + 1) % w.size()]}).second,
                      "directed edge used twice in fixture");
    // a boundary dart is the missing reverse of a single-use edge
    std::map<VertexId, VertexId> next;
    for (auto [a, b] : used)
        if (!used.count({b, a})) {
            ICC_CHECK(!next.count(b), "boundary revisits a vertex; fixture needs local stitching");
            next[b] = a;
        }
    ICC_CHECK(!next.empty(), "fixture is already closed");
    std::vector<VertexId> walk;
    VertexId start = next.begin()->first, cur = start;
    do {
        walk.push_back(cur);
        cur = next.at(cur);
    } while (cur != start);
    ICC_CHECK(walk.size() == next.size(), "boundary is not a single cycle");
    int L = (int)walk.size();
    VertexId apex = first_new_id + L;
    for (int j = 0; j < L; ++j) {
        VertexId wj = walk[j], wj1 = walk[(j + 1) % L];
        VertexId yj = first_new_id + j, yj1 = first_new_id + (j + 1) % L;
        faces.push_back({wj, wj1, yj});
        faces.push_back({yj, wj1, yj1});
        faces.push_back({apex, yj, yj1});
    }
    return faces;
}

PlaneGraph tetrahedron() {
    return PlaneGraph::from_neighbor_lists({
        {0, {1, 2, 3}},
        {1, {2, 0, 3}},
        {2, {3, 0, 1}},
        {3, {1, 0, 2}},
    });
}

PlaneGraph cube() {
    return PlaneGraph::from_neighbor_lists({
        {0, {1, 3, 4}},
        {1, {2, 0, 5}},
        {2, {3, 1, 6}},
        {3, {0, 2, 7}},
        {4, {5, 0, 7}},
        {5, {6, 1, 4}},
        {6, {7, 2, 5}},
        {7, {4, 3, 6}},
    });
}

PlaneGraph octahedron() {
    return PlaneGraph::from_faces({
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
        {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4},
    });
}

PlaneGraph icosahedron() {
    Walks faces;
    for (int i = 0; i < 5; ++i) {
        int r = 1 + i, r1 = 1 + (i + 1) % 5;
        int s = 6 + i, s1 = 6 + (i + 1) % 5;
        faces.push_back({0, r, r1});
        faces.push_back({r, s, r1});
        faces.push_back({s, s1, r1});
        faces.push_back({11, s1, s});
    }
    return PlaneGraph::from_faces(faces);
}

PlaneGraph prism_k3() {
    return PlaneGraph::from_faces({
        {0, 1, 2}, {3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {2, 0, 3, 5},
    });
}

PlaneGraph pentagon_pyramid() {
    return PlaneGraph::from_faces({
        {0, 1, 2, 3, 4}, {5, 1, 0}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 0, 4},
    });
}

PlaneGraph pinwheel() {
    Walks faces;
    auto r = [](int i) { return 1 + (i % 5 + 5) % 5; };
    auto a = [](int i) { return 6 + 3 * ((i % 5 + 5) % 5); };
    auto c = [](int i) { return 7 + 3 * ((i % 5 + 5) % 5); };
    auto b = [](int i) { return 8 + 3 * ((i % 5 + 5) % 5); };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, r(i), r(i + 1)});
        faces.push_back({r(i), a(i), c(i), b(i)});
        faces.push_back({r(i), b(i), r(i + 1)});
        faces.push_back({r(i + 1), b(i), a(i + 1)});
    }
    return PlaneGraph::from_faces(with_collar(std::move(faces), 21));
}

PlaneGraph square55_host() {
    Walks faces = {
        {1, 2, 3, 4},              // quad
        {1, 2, 5},                 // w
        {1, 5, 6},  {1, 6, 7},  {1, 7, 4},   // fan at v1
        {2, 8, 5},  {2, 9, 8},  {2, 3, 9},   // fan at v2
    };
    return PlaneGraph::from_faces(with_collar(std::move(faces), 10));
}

PlaneGraph close_host(bool six) {
    Walks faces = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},  // ring
        {2, 1, 7, 6},                                            // close quad
        {4, 3, 10 + (six ? 1 : 0), 9 + (six ? 1 : 0)},           // quad for 3,4
    };
    if (!six) {
        // v1 = 1 of degree 5: extra neighbor 8
        faces.push_back({1, 7, 8});
        faces.push_back({1, 8, 5});
        // hanging quad for 5, stitched on both sides
        faces.push_back({5, 11, 12, 13});
        faces.push_back({5, 8, 11});
        faces.push_back({5, 13, 4});
        return PlaneGraph::from_faces(with_collar(std::move(faces), 14));
    }
    // v1 = 1 of degree 6: extra neighbors z=8 and w=9
    faces.push_back({1, 7, 8});
    faces.push_back({1, 8, 9});
    faces.push_back({1, 9, 5});
    faces.push_back({5, 12, 13, 14});
    faces.push_back({5, 9, 12});
    faces.push_back({5, 14, 4});
    return PlaneGraph::from_faces(with_collar(std::move(faces), 15));
}

PlaneGraph pentagon65_host() {
    Walks faces = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},  // ring
        {1, 2, 6},                  // w = 6
        {1, 6, 7},                  // w' = 7
        {1, 7, 9, 8},               // q1: v1, w', a=9, b=8
        {1, 8, 5},                  // v1, b, v5
        {6, 7, 10},                 // w, w', y
        {6, 10, 11},                // w, y, w''
        {2, 6, 11, 12},             // q_w: v2, w, w''=11, t=12
        {4, 3, 14, 13},             // quad for ring vertices 3, 4
        {5, 15, 16, 17},            // hanging quad for 5
        {5, 8, 15}, {5, 17, 4},     // stitches
    };
    return PlaneGraph::from_faces(with_collar(std::move(faces), 18));
}

PlaneGraph pentagon66_host() {
    Walks faces = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},  // ring
        {1, 2, 6},                  // w = 6 (degree six)
        {1, 6, 7},                  // w' = 7
        {1, 7, 15, 14},             // q1: v1, w', a=15, b=14
        {1, 14, 5},                 // v1, b, v5
        {6, 7, 10},                 // w, w', w''=10
        {6, 10, 11},                // w, w'', w'''=11
        {6, 11, 12},                // w, w''', w''''=12
        {2, 6, 12, 13},             // q_w: v2, w, w''''=12, s=13
        {4, 3, 21, 20},             // quad for ring vertices 3, 4
        {5, 17, 18, 19},            // hanging quad for 5
        {5, 14, 17}, {5, 19, 4},    // stitches
    };
    return PlaneGraph::from_faces(with_collar(std::move(faces), 22));
}

PlaneGraph lowdegree_quad_host() {
    Walks faces = {
        {0, 1, 5, 2},               // quad through v=0
        {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
    };
    return PlaneGraph::from_faces(with_collar(std::move(faces), 6));
}

PlaneGraph doublesided_host() {
    Walks faces = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},  // ring
        {1, 2, 6},                  // wing 6
        {1, 6, 8},
        {1, 8, 9, 10},              // distant quad avoiding both wings
        {1, 10, 7},
        {1, 7, 5},                  // wing 7
        {3, 2, 11, 12},             // quad for ring vertices 2, 3
        {5, 4, 13, 14},             // quad for ring vertices 4, 5
    };
    return PlaneGraph::from_faces(with_collar(std::move(faces), 15));
}

PlaneGraph degfive_host() {
    Walks faces = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},  // ring
        {1, 2, 6},                  // wing 6 on the quad
        {1, 6, 7, 8},               // quad of vertex 1
        {1, 8, 5},                  // wing 8 on the quad
        {3, 2, 9, 10},
        {5, 4, 11, 12},
    };
    return PlaneGraph::from_faces(with_collar(std::move(faces), 13));
}

PlaneGraph sepcycle2_host() {
    // u=0, v=1, a=2, b=3; two parallel edges 0-1 separating a from b
    std::vector<VertexId> origin = {0, 1, 0, 1, 0, 2, 2, 1, 0, 3, 3, 1};
    std::vector<std::vector<Dart>> rot = {
        {4, 0, 8, 2},   // u: a, e0, b, e1
        {7, 3, 11, 1},  // v: a, e1, b, e0
        {5, 6},         // a: u, v
        {9, 10},        // b: u, v
    };
    return PlaneGraph::from_raw(std::move(origin), std::move(rot));
}

PlaneGraph octahedron_apex() {
    return PlaneGraph::from_faces({
        {6, 1, 0}, {6, 2, 1}, {6, 0, 2},
        {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
        {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4},
    });
}

ICDrawing k5_drawing() {
    ICDrawing d;
    d.graph = PlaneGraph::from_faces({
        {5, 0, 3}, {5, 3, 1}, {5, 1, 4}, {5, 4, 0},
        {0, 2, 3}, {1, 3, 2}, {4, 0, 2}, {4, 2, 1},
    });
    d.dummies = {5};
    return d;
}

}  // namespace icc::fixtures
