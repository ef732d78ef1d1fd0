#include "iccolor/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace icc {

namespace {

// Orients a face list coherently: every edge ends up used once per direction.
// Throws invalid_input_error if the complex is not orientable or not closed.
std::vector<std::vector<VertexId>> orient_faces(std::vector<std::vector<VertexId>> faces) {
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> edge_faces;
    for (int i = 0; i < (int)faces.size(); ++i) {
        const auto& w = faces[i];
        if (w.size() < 2) throw invalid_input_error("face walk shorter than 2");
        for (size_t j = 0; j < w.size(); ++j) {
            VertexId a = w[j], b = w[(j + 1) % w.size()];
            if (a == b) throw invalid_input_error("face walk with a loop");
            auto key = std::minmax(a, b);
            edge_faces[{key.first, key.second}].push_back(i);
        }
    }
    for (auto& [e, fs] : edge_faces)
        if (fs.size() != 2)
            throw invalid_input_error("edge not on exactly two faces; face list is not closed");

    std::vector<int> state(faces.size(), 0);  // 0 unseen, 1 as-is, 2 flipped
    std::vector<int> stack;
    auto uses_forward = [&](int i, VertexId a, VertexId b) {
        const auto& w = faces[i];
        for (size_t j = 0; j < w.size(); ++j)
            if (w[j] == a && w[(j + 1) % w.size()] == b) return true;
        return false;
    };
    for (int start = 0; start < (int)faces.size(); ++start) {
        if (state[start]) continue;
        state[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            const auto& w = faces[i];
            for (size_t j = 0; j < w.size(); ++j) {
                VertexId a = w[j], b = w[(j + 1) % w.size()];
                auto key = std::minmax(a, b);
                const auto& fs = edge_faces[{key.first, key.second}];
                int other = fs[0] == i ? fs[1] : fs[0];
                if (other == i) continue;  // same face twice: both directions there
                bool other_forward = uses_forward(other, a, b);
                // coherent orientation: the other face must use b->a
                int want = other_forward ? 2 : 1;
                if (state[other] == 0) {
                    if (want == 2) std::reverse(faces[other].begin(), faces[other].end());
                    state[other] = 1;
                    stack.push_back(other);
                } else if (want == 2) {
                    throw invalid_input_error("face list is not orientable");
                }
            }
        }
    }
    // final coherence check
    std::set<std::pair<VertexId, VertexId>> dir;
    for (const auto& w : faces)
        for (size_t j = 0; j < w.size(); ++j) {
            auto key = std::make_pair(w[j], w[(j + 1) % w.size()]);
            if (!dir.insert(key).second)
                throw invalid_input_error("directed edge used twice after orientation");
        }
    return faces;
}

}  // namespace

PlaneGraph PlaneGraph::from_neighbor_lists(
    const std::vector<std::pair<VertexId, std::vector<VertexId>>>& rows) {
    PlaneGraph g;
    std::map<VertexId, const std::vector<VertexId>*> row_of;
    for (const auto& [v, nbrs] : rows) {
        if (v < 0) throw invalid_input_error("negative vertex id");
        if (row_of.count(v)) throw invalid_input_error("duplicate vertex row");
        row_of[v] = &nbrs;
        g.ensure_vertex(v);
    }
    for (const auto& [v, nbrs] : rows)
        for (VertexId w : nbrs)
            if (!g.has_vertex(w))
                throw invalid_input_error("neighbor list mentions unknown vertex " +
                                          std::to_string(w));
    // Pair the i-th mention of w at u with the i-th mention of u at w.
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> slot_dart;
    for (const auto& [u, nbrs] : rows) {
        std::map<VertexId, int> seen;
        for (size_t pos = 0; pos < nbrs.size(); ++pos) {
            VertexId w = nbrs[pos];
            int occ = seen[w]++;
            if (u == w) {
                // loop: mentions pair up consecutively
                auto& darts = slot_dart[{u, u}];
                if (occ % 2 == 0) {
                    Dart d = g.new_dart_pair(u, u);
                    darts.push_back(d);
                    g.rot_[u].push_back(d);
                } else {
                    g.rot_[u].push_back(twin(darts[occ / 2]));
                }
                continue;
            }
            if (u < w) {
                auto& darts = slot_dart[{u, w}];
                while ((int)darts.size() <= occ) darts.push_back(g.new_dart_pair(u, w));
                g.rot_[u].push_back(darts[occ]);
            } else {
                auto& darts = slot_dart[{w, u}];
                while ((int)darts.size() <= occ) darts.push_back(g.new_dart_pair(w, u));
                g.rot_[u].push_back(twin(darts[occ]));
            }
        }
    }
    // consistency: every mention matched from both sides
    for (const auto& [v, nbrs] : rows) {
        (void)nbrs;
        for (Dart d : g.rot_[v])
            if (g.origin_[d] != v) throw invalid_input_error("inconsistent adjacency lists");
    }
    std::map<std::pair<VertexId, VertexId>, int> counts;
    for (const auto& [u, nbrs] : rows)
        for (VertexId w : nbrs) counts[std::minmax(u, w)]++;
    for (const auto& [e, c] : counts) {
        bool is_loop = e.first == e.second;
        if (!is_loop && c % 2 != 0)
            throw invalid_input_error("edge mentioned an odd number of times");
        int expected = (int)slot_dart[{e.first, e.second}].size() * (is_loop ? 1 : 2);
        if (is_loop) expected = (int)slot_dart[{e.first, e.second}].size() * 2;
        if (c != expected) throw invalid_input_error("inconsistent adjacency multiplicity");
    }
    g.retrace();
    if (!g.is_sphere())
        throw invalid_input_error("rotation system is not a sphere embedding");
    return g;
}

PlaneGraph PlaneGraph::from_faces(const std::vector<std::vector<VertexId>>& face_walks) {
    auto faces = orient_faces(face_walks);
    // rotation successor at v: (v -> prev) is followed by (v -> next) for
    // every corner prev -> v -> next of a face walk
    std::map<VertexId, std::map<VertexId, VertexId>> succ;
    std::set<VertexId> vs;
    for (const auto& w : faces) {
        size_t k = w.size();
        for (size_t j = 0; j < k; ++j) {
            VertexId p = w[j], v = w[(j + 1) % k], n = w[(j + 2) % k];
            auto ins = succ[v].emplace(p, n);
            if (!ins.second) throw invalid_input_error("corner used twice; complex not simple");
            vs.insert(v);
        }
    }
    std::vector<std::pair<VertexId, std::vector<VertexId>>> rows;
    for (VertexId v : vs) {
        const auto& m = succ.at(v);
        std::vector<VertexId> order;
        VertexId start = m.begin()->first, cur = start;
        do {
            order.push_back(cur);
            auto it = m.find(cur);
            if (it == m.end()) throw invalid_input_error("rotation at vertex does not close");
            cur = it->second;
        } while (cur != start && order.size() <= m.size());
        if (order.size() != m.size())
            throw invalid_input_error("rotation at vertex is not a single cycle");
        rows.emplace_back(v, std::move(order));
    }
    return from_neighbor_lists(rows);
}

PlaneGraph PlaneGraph::from_raw(std::vector<VertexId> origin_per_dart,
                                std::vector<std::vector<Dart>> rotations) {
    PlaneGraph g;
    g.origin_ = std::move(origin_per_dart);
    g.rot_ = std::move(rotations);
    g.alive_.assign(g.rot_.size(), 0);
    for (VertexId v = 0; v < (int)g.rot_.size(); ++v)
        if (!g.rot_[v].empty()) g.alive_[v] = 1;
    g.verify_structure();
    g.retrace();
    if (!g.is_sphere())
        throw invalid_input_error("rotation system is not a sphere embedding");
    return g;
}

std::vector<VertexId> PlaneGraph::vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < (int)alive_.size(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

std::vector<VertexId> PlaneGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(rot_[v].size());
    for (Dart d : rot_[v]) out.push_back(head(d));
    return out;
}

bool PlaneGraph::adjacent(VertexId u, VertexId w) const {
    for (Dart d : rot_[u])
        if (head(d) == w) return true;
    return false;
}

Dart PlaneGraph::dart_between(VertexId u, VertexId w) const {
    Dart best = -1;
    for (Dart d : rot_[u])
        if (head(d) == w && (best < 0 || d < best)) best = d;
    return best;
}

std::vector<VertexId> PlaneGraph::face_vertices(int f) const {
    std::vector<VertexId> out;
    for (Dart d : faces_[f].boundary) out.push_back(origin_[d]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> PlaneGraph::faces_of_vertex(VertexId v) const {
    std::vector<int> out;
    for (Dart d : rot_[v]) out.push_back(face_of_[d]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> PlaneGraph::common_faces(VertexId u, VertexId w) const {
    auto a = faces_of_vertex(u), b = faces_of_vertex(w);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool PlaneGraph::face_has_edge(int f, VertexId u, VertexId w) const {
    for (Dart d : faces_[f].boundary) {
        VertexId a = origin_[d], b = head(d);
        if ((a == u && b == w) || (a == w && b == u)) return true;
    }
    return false;
}

Dart PlaneGraph::rotate_after(Dart d) const {
    const auto& r = rot_[origin_[d]];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == d) return r[(i + 1) % r.size()];
    ICC_CHECK(false, "dart missing from its origin rotation");
    return -1;
}

Dart PlaneGraph::rotate_before(Dart d) const {
    const auto& r = rot_[origin_[d]];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == d) return r[(i + r.size() - 1) % r.size()];
    ICC_CHECK(false, "dart missing from its origin rotation");
    return -1;
}

void PlaneGraph::retrace() {
    faces_.clear();
    face_of_.assign(origin_.size(), -1);
    // successor-in-rotation table, so each walk step is O(1)
    std::vector<Dart> succ(origin_.size(), -1);
    for (VertexId v = 0; v < (int)rot_.size(); ++v) {
        const auto& r = rot_[v];
        for (size_t i = 0; i < r.size(); ++i) succ[r[i]] = r[(i + 1) % r.size()];
    }
    for (Dart d = 0; d < (int)origin_.size(); ++d) {
        if (origin_[d] < 0 || face_of_[d] >= 0) continue;
        Face f;
        f.boundary.reserve(4);
        Dart cur = d;
        do {
            ICC_CHECK(face_of_[cur] == -1, "face tracing revisited a dart");
            face_of_[cur] = (int)faces_.size();
            f.boundary.push_back(cur);
            cur = succ[twin(cur)];
            ICC_CHECK(cur >= 0, "rotation system has a dangling dart");
        } while (cur != d);
        faces_.push_back(std::move(f));
    }
    n_vertices_ = 0;
    n_edges_ = 0;
    for (VertexId v = 0; v < (int)alive_.size(); ++v)
        if (alive_[v]) ++n_vertices_;
    for (Dart d = 0; d < (int)origin_.size(); d += 2)
        if (origin_[d] >= 0) ++n_edges_;
    auto comp = component_ids();
    n_components_ = 0;
    for (VertexId v = 0; v < (int)comp.size(); ++v)
        if (alive_[v]) n_components_ = std::max(n_components_, comp[v] + 1);
}

std::vector<int> PlaneGraph::component_ids() const {
    std::vector<int> comp(alive_.size(), -1);
    int c = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < (int)alive_.size(); ++s) {
        if (!alive_[s] || comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (Dart d : rot_[v]) {
                VertexId w = head(d);
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    return comp;
}

bool PlaneGraph::is_sphere() const {
    auto comp = component_ids();
    int c = n_components_;
    if (c == 0) return true;
    std::vector<int> vcount(c, 0), ecount(c, 0), fcount(c, 0);
    for (VertexId v = 0; v < (int)alive_.size(); ++v)
        if (alive_[v]) {
            if (rot_[v].empty()) return false;  // isolated vertex: no face structure
            vcount[comp[v]]++;
        }
    for (Dart d = 0; d < (int)origin_.size(); d += 2)
        if (origin_[d] >= 0) ecount[comp[origin_[d]]]++;
    for (const auto& f : faces_) fcount[comp[origin_[f.boundary[0]]]]++;
    for (int i = 0; i < c; ++i)
        if (vcount[i] - ecount[i] + fcount[i] != 2) return false;
    return true;
}

VertexId PlaneGraph::ensure_vertex(VertexId v) {
    if (v >= (int)alive_.size()) {
        alive_.resize(v + 1, 0);
        rot_.resize(v + 1);
    }
    alive_[v] = 1;
    return v;
}

Dart PlaneGraph::new_dart_pair(VertexId u, VertexId w) {
    Dart d;
    if (!free_pairs_.empty()) {
        d = free_pairs_.back();
        free_pairs_.pop_back();
    } else {
        d = (Dart)origin_.size();
        origin_.resize(d + 2, -1);
    }
    origin_[d] = u;
    origin_[d + 1] = w;
    return d;
}

void PlaneGraph::free_dart_pair(Dart d) {
    d &= ~1;
    origin_[d] = origin_[d + 1] = -1;
    free_pairs_.push_back(d);
}

void PlaneGraph::erase_from_rotation(Dart d) {
    auto& r = rot_[origin_[d]];
    auto it = std::find(r.begin(), r.end(), d);
    ICC_CHECK(it != r.end(), "dart missing from rotation on erase");
    r.erase(it);
}

void PlaneGraph::delete_edge_of_dart(Dart d) {
    ICC_CHECK(dart_alive(d), "delete_edge on dead dart");
    erase_from_rotation(d);
    erase_from_rotation(twin(d));
    free_dart_pair(d);
    retrace();
}

void PlaneGraph::delete_vertex(VertexId v) {
    ICC_CHECK(has_vertex(v), "delete_vertex on absent vertex");
    auto darts = rot_[v];
    for (Dart d : darts) {
        if (origin_[d] < 0) continue;  // loop already freed by its twin
        if (head(d) != v) erase_from_rotation(twin(d));
        free_dart_pair(d);
    }
    rot_[v].clear();
    alive_[v] = 0;
    retrace();
}

Dart PlaneGraph::add_chord_raw(Dart cu, Dart cw) {
    ICC_CHECK(dart_alive(cu) && dart_alive(cw), "chord corner dart dead");
    ICC_CHECK(cu != cw, "chord needs two distinct corners");
    VertexId u = origin_[cu], w = origin_[cw];
    ICC_CHECK(u != w, "chord would be a loop");
    Dart d = new_dart_pair(u, w);
    auto& ru = rot_[u];
    ru.insert(std::find(ru.begin(), ru.end(), cu), d);
    auto& rw = rot_[w];
    rw.insert(std::find(rw.begin(), rw.end(), cw), twin(d));
    return d;
}

Dart PlaneGraph::add_edge_in_face(int f, VertexId u, VertexId w) {
    if (u == w) throw invalid_input_error("edge endpoints coincide");
    Dart cu = -1, cw = -1;
    for (Dart d : faces_[f].boundary) {
        if (cu < 0 && origin_[d] == u) cu = d;
        if (cw < 0 && origin_[d] == w) cw = d;
    }
    if (cu < 0 || cw < 0) throw invalid_input_error("vertex not on the given face");
    ICC_CHECK(face_of_[cu] == f && face_of_[cw] == f, "stale face data");
    Dart d = add_chord_raw(cu, cw);
    retrace();
    return d;
}

void PlaneGraph::contract_chord(Dart chord) {
    VertexId u = origin_[chord], w = head(chord);
    ICC_CHECK(u != w, "contracting a loop");
    Dart t = twin(chord);
    auto& rw = rot_[w];
    size_t pw = std::find(rw.begin(), rw.end(), t) - rw.begin();
    ICC_CHECK(pw < rw.size(), "chord twin missing at head");
    std::vector<Dart> seq;
    for (size_t i = 1; i < rw.size(); ++i) seq.push_back(rw[(pw + i) % rw.size()]);
    for (Dart d : seq) origin_[d] = u;
    auto& ru = rot_[u];
    auto it = std::find(ru.begin(), ru.end(), chord);
    ICC_CHECK(it != ru.end(), "chord missing at origin");
    it = ru.erase(it);
    ru.insert(it, seq.begin(), seq.end());
    rw.clear();
    alive_[w] = 0;
    free_dart_pair(chord);
}

VertexId PlaneGraph::identify_vertices(const std::vector<VertexId>& group) {
    ICC_CHECK(group.size() >= 2, "identify needs at least two vertices");
    std::vector<VertexId> rest(group.begin(), group.end());
    std::sort(rest.begin(), rest.end());
    rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
    ICC_CHECK(rest.size() >= 2, "identify needs distinct vertices");
    VertexId keep = rest[0];
    for (size_t i = 1; i < rest.size(); ++i) {
        VertexId b = rest[i];
        ICC_CHECK(has_vertex(keep) && has_vertex(b), "identify on absent vertex");
        if (adjacent(keep, b))
            throw invalid_input_error(
                "identification would create a loop (separating short cycle in host)");
        auto cf = common_faces(keep, b);
        if (cf.empty())
            throw invalid_input_error("non-coplanar identification: no common face");
        int f = cf[0];
        Dart cu = -1, cw = -1;
        for (Dart d : faces_[f].boundary) {
            if (cu < 0 && origin_[d] == keep) cu = d;
            if (cw < 0 && origin_[d] == b) cw = d;
        }
        ICC_CHECK(cu >= 0 && cw >= 0, "common face lost its corners");
        Dart chord = add_chord_raw(cu, cw);
        contract_chord(chord);
        retrace();
        suppress_all_2faces();
    }
    return keep;
}

void PlaneGraph::triangulate_face(int f) {
    if (faces_[f].size() <= 3) return;
    // fan apex: lowest-id vertex on the walk
    Dart apex_corner = -1;
    for (Dart d : faces_[f].boundary)
        if (apex_corner < 0 || origin_[d] < origin_[apex_corner]) apex_corner = d;
    Dart cur = apex_corner;
    while (true) {
        // walk from the apex corner; re-derive the current face of cur
        std::vector<Dart> walk;
        Dart d = cur;
        do {
            walk.push_back(d);
            d = next_in_face(d);
        } while (d != cur);
        if (walk.size() <= 3) break;
        if (origin_[walk[2]] == origin_[cur])
            throw invalid_input_error("pinched face: fan triangulation would create a loop");
        cur = add_chord_raw(cur, walk[2]);
    }
    retrace();
}

bool PlaneGraph::flip_edge(Dart d) {
    if (!dart_alive(d)) return false;
    int f1 = face_of_[d], f2 = face_of_[twin(d)];
    if (f1 == f2 || faces_[f1].size() != 3 || faces_[f2].size() != 3) return false;
    VertexId u = origin_[d], w = head(d);
    if (degree(u) < 4 || degree(w) < 4) return false;
    Dart wa = next_in_face(d), au = next_in_face(wa);
    Dart ub = next_in_face(twin(d)), bw = next_in_face(ub);
    VertexId a = origin_[au], b = origin_[bw];
    if (a == b || a == u || a == w || b == u || b == w) return false;
    if (adjacent(a, b)) return false;
    erase_from_rotation(d);
    erase_from_rotation(twin(d));
    free_dart_pair(d);
    add_chord_raw(au, bw);
    retrace();
    return true;
}

void PlaneGraph::suppress_2face(int f) {
    ICC_CHECK(faces_[f].size() == 2, "suppress_2face on face of size != 2");
    Dart a = faces_[f].boundary[0], b = faces_[f].boundary[1];
    ICC_CHECK(edge_of(a) != edge_of(b), "2-face bounded by a single edge cannot be suppressed");
    Dart victim = std::max(edge_of(a), edge_of(b)) == edge_of(a) ? a : b;
    erase_from_rotation(victim);
    erase_from_rotation(twin(victim));
    free_dart_pair(victim);
    retrace();
}

void PlaneGraph::suppress_all_2faces() {
    while (true) {
        int target = -1;
        for (int f = 0; f < (int)faces_.size(); ++f) {
            if (faces_[f].size() != 2) continue;
            if (edge_of(faces_[f].boundary[0]) == edge_of(faces_[f].boundary[1])) continue;
            target = f;
            break;
        }
        if (target < 0) return;
        suppress_2face(target);
    }
}

VertexId PlaneGraph::star_face(int f) {
    std::vector<Dart> walk = faces_[f].boundary;
    VertexId z = ensure_vertex((int)alive_.size());
    std::vector<Dart> zdarts;  // dart z -> origin(walk[i])
    for (Dart c : walk) {
        Dart d = new_dart_pair(origin_[c], z);
        auto& r = rot_[origin_[c]];
        r.insert(std::find(r.begin(), r.end(), c), d);
        zdarts.push_back(twin(d));
    }
    // rotation at z is the reversed walk order
    std::reverse(zdarts.begin(), zdarts.end());
    rot_[z] = zdarts;
    retrace();
    return z;
}

void PlaneGraph::verify_structure() const {
    for (VertexId v = 0; v < (int)rot_.size(); ++v) {
        if (!alive_.empty() && !alive_[v]) {
            ICC_CHECK(rot_[v].empty(), "dead vertex with darts");
            continue;
        }
        for (Dart d : rot_[v]) {
            ICC_CHECK(d >= 0 && d < (int)origin_.size(), "dart id out of range");
            ICC_CHECK(origin_[d] == v, "rotation contains foreign dart");
        }
    }
    std::vector<char> seen(origin_.size(), 0);
    for (VertexId v = 0; v < (int)rot_.size(); ++v)
        for (Dart d : rot_[v]) {
            ICC_CHECK(!seen[d], "dart listed twice");
            seen[d] = 1;
        }
    for (Dart d = 0; d < (int)origin_.size(); ++d) {
        if (origin_[d] < 0) {
            ICC_CHECK(!seen[d], "dead dart in a rotation");
            continue;
        }
        ICC_CHECK(seen[d], "live dart missing from rotations");
        ICC_CHECK(origin_[twin(d)] >= 0, "dart without live twin");
    }
}

}  // namespace icc
