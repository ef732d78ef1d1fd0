#include "iccolor/discharge.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "iccolor/detect.hpp"

namespace icc {

std::string Charge::to_fraction() const {
    std::int64_t p = twentieths, q = 20;
    std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g == 0) g = 20;
    std::ostringstream os;
    os << p / g << '/' << q / g;
    return os.str();
}

const char* to_string(RuleId r) {
    switch (r) {
        case RuleId::S1: return "S1";
        case RuleId::S2: return "S2";
        case RuleId::PC: return "PC";
        case RuleId::P5a: return "P5a";
        case RuleId::P5b: return "P5b";
        case RuleId::P6a: return "P6a";
        case RuleId::P6b: return "P6b";
        case RuleId::P7a: return "P7a";
        case RuleId::P7b: return "P7b";
        case RuleId::P7c: return "P7c";
        case RuleId::P8plus: return "P8+";
    }
    return "?";
}

std::string ElemRef::to_string() const {
    return (kind == Vertex ? "v" : "f") + std::to_string(id);
}

Charge ChargeLedger::total() const {
    Charge t;
    for (const auto& [v, c] : vertex_charge) t += c;
    for (const auto& [f, c] : face_charge) t += c;
    return t;
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    ChargeLedger led;
    for (VertexId v : g.vertices()) led.vertex_charge[v] = Charge::units(g.degree(v) - 6);
    for (int f = 0; f < g.n_faces(); ++f)
        led.face_charge[f] = Charge::units(2 * g.face(f).size() - 6);
    return led;
}

std::optional<std::pair<RuleId, Charge>> distant_rule(int dw, int d1, int d2, Sidedness s) {
    auto exactly_one = [](int a, int b, int val) { return (a == val) != (b == val); };
    if (dw == 5) {
        if (exactly_one(d1, d2, 6)) return {{RuleId::P5a, Charge{4}}};   // 0.2
        if (d1 >= 7 && d2 >= 7) return {{RuleId::P5b, Charge{8}}};       // 0.4
        return std::nullopt;
    }
    if (dw == 6) {
        if (exactly_one(d1, d2, 5) && exactly_one(d1, d2, 6))
            return {{RuleId::P6a, Charge{5}}};                           // 0.25
        if (d1 + d2 >= 12) return {{RuleId::P6b, Charge{10}}};           // 0.5
        return std::nullopt;
    }
    if (dw == 7) {
        if (s == Sidedness::OneSided) {
            if (d1 == 5 && d2 == 5) return {{RuleId::P7a, Charge{6}}};   // 0.3
            return {{RuleId::P7b, Charge{10}}};                          // 0.5
        }
        if (s == Sidedness::DoubleSided) return {{RuleId::P7c, Charge{10}}};
        return std::nullopt;  // the both-wings case forces degree 5
    }
    if (dw >= 8) return {{RuleId::P8plus, Charge{10}}};
    return std::nullopt;
}

ChargeLedger apply_rules(const PlaneGraph& g) {
    ChargeLedger led = initial_charges(g);
    auto transfer = [&](RuleId r, ElemRef from, ElemRef to, Charge amount) {
        if (amount.twentieths == 0) return;
        (from.kind == ElemRef::Vertex ? led.vertex_charge[from.id] : led.face_charge[from.id]) -=
            amount;
        (to.kind == ElemRef::Vertex ? led.vertex_charge[to.id] : led.face_charge[to.id]) +=
            amount;
        led.log.push_back({r, from, to, amount});
    };
    auto cls = classify(g);

    // S1: every 5-vertex on a 4-face receives 1 unit from its unique 4-face.
    // S2: every d-vertex on a 4-face, d >= 6, sends d-6 units to it.
    for (VertexId v : g.vertices()) {
        int f = unique_4face(g, v);  // asserts uniqueness
        if (f < 0) continue;
        int d = g.degree(v);
        if (d == 5)
            transfer(RuleId::S1, {ElemRef::Face, f}, {ElemRef::Vertex, v}, Charge::units(1));
        else if (d >= 6)
            transfer(RuleId::S2, {ElemRef::Vertex, v}, {ElemRef::Face, f}, Charge::units(d - 6));
    }

    for (const auto& [v, c] : cls) {
        if (!c.pentagonal) continue;
        // PC: 1 unit from each close 4-face.
        std::set<int> close_faces;
        for (VertexId w : g.neighbors(v))
            for (int f : cls.at(w).incident_4faces)
                if (face_proximity(g, v, f) == Proximity::Close) close_faces.insert(f);
        for (int f : close_faces)
            transfer(RuleId::PC, {ElemRef::Face, f}, {ElemRef::Vertex, v}, Charge::units(1));
        // P5a..P8+: per neighbor w on a distant 4-face f with flanks w', w''.
        for (VertexId w : g.neighbors(v)) {
            int f = unique_4face(g, w);
            if (f < 0 || close_faces.count(f)) continue;
            if (face_proximity(g, v, f) == Proximity::Close) continue;
            VertexId w1 = -1, w2 = -1;
            for (Dart d : g.face(f).boundary) {
                if (g.origin(d) == w) w1 = g.head(d);
                if (g.head(d) == w) w2 = g.origin(d);
            }
            ICC_CHECK(w1 >= 0 && w2 >= 0, "face neighbors of w not found");
            auto rule = distant_rule(g.degree(w), g.degree(w1), g.degree(w2), sidedness(g, v, w));
            if (rule)
                transfer(rule->first, {ElemRef::Face, f}, {ElemRef::Vertex, v}, rule->second);
        }
    }
    return led;
}

namespace {

// BFS distances from a seed set, capped.
std::vector<int> bfs_from(const PlaneGraph& g, const std::vector<VertexId>& seeds, int cap) {
    std::vector<int> dist(g.dart_limit() + 1, -1);
    int maxv = 0;
    for (VertexId v : g.vertices()) maxv = std::max(maxv, v + 1);
    dist.assign(maxv, -1);
    std::queue<VertexId> q;
    for (VertexId s : seeds)
        if (s >= 0 && s < maxv && dist[s] < 0) {
            dist[s] = 0;
            q.push(s);
        }
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        if (dist[v] >= cap) continue;
        for (VertexId u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

}  // namespace

std::string AuditReport::to_string() const {
    std::ostringstream os;
    os << "total initial = " << total_initial.to_fraction() << '\n';
    os << "total final = " << total_final.to_fraction() << '\n';
    for (const auto& a : log)
        os << "rule=" << icc::to_string(a.rule) << " from=" << a.from.to_string()
           << " to=" << a.to.to_string() << " amount=" << a.amount.to_fraction() << '\n';
    for (const auto& e : negatives) {
        os << "negative: " << e.elem.to_string() << " final=" << e.final_charge.to_fraction();
        if (!e.nearest_kind.empty())
            os << " nearest=" << e.nearest_kind << " dist=" << e.distance;
        else
            os << " nearest=none";
        os << '\n';
    }
    os << "anomaly-count = " << anomaly_count << '\n';
    return os.str();
}

AuditReport audit(const PlaneGraph& g) {
    constexpr int kRadius = 3;
    AuditReport rep;
    rep.total_initial = initial_charges(g).total();
    ChargeLedger led = apply_rules(g);
    rep.total_final = led.total();
    rep.log = led.log;

    auto matches = find_all_configurations(g);
    std::vector<std::vector<int>> match_dist;
    for (const auto& m : matches) match_dist.push_back(bfs_from(g, m.vertices, kRadius));

    auto nearest = [&](const std::vector<VertexId>& elem_verts, AuditEntry& e) {
        int best = -1, best_idx = -1;
        for (size_t i = 0; i < matches.size(); ++i) {
            int d = -1;
            for (VertexId v : elem_verts) {
                if (v >= (int)match_dist[i].size()) continue;
                int dv = match_dist[i][v];
                if (dv >= 0 && (d < 0 || dv < d)) d = dv;
            }
            if (d >= 0 && (best < 0 || d < best)) {
                best = d;
                best_idx = (int)i;
            }
        }
        if (best_idx >= 0 && best <= kRadius) {
            e.nearest_kind = icc::to_string(matches[best_idx].kind);
            e.distance = best;
        }
    };

    for (const auto& [v, c] : led.vertex_charge) {
        if (!c.negative()) continue;
        AuditEntry e{{ElemRef::Vertex, v}, c, "", -1};
        nearest({v}, e);
        if (e.nearest_kind.empty()) ++rep.anomaly_count;
        rep.negatives.push_back(std::move(e));
    }
    for (const auto& [f, c] : led.face_charge) {
        if (!c.negative()) continue;
        AuditEntry e{{ElemRef::Face, f}, c, "", -1};
        nearest(g.face_vertices(f), e);
        if (e.nearest_kind.empty()) ++rep.anomaly_count;
        rep.negatives.push_back(std::move(e));
    }
    return rep;
}

}  // namespace icc
