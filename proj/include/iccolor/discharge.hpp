#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iccolor/classify.hpp"
#include "iccolor/plane_graph.hpp"

namespace icc {

// Exact charge in twentieths; every rule amount is a multiple of 1/20, so
// the arithmetic never leaves this grid.
struct Charge {
    std::int64_t twentieths = 0;

    static Charge units(std::int64_t u) { return {u * 20}; }
    Charge operator+(Charge o) const { return {twentieths + o.twentieths}; }
    Charge operator-(Charge o) const { return {twentieths - o.twentieths}; }
    Charge& operator+=(Charge o) { twentieths += o.twentieths; return *this; }
    Charge& operator-=(Charge o) { twentieths -= o.twentieths; return *this; }
    auto operator<=>(const Charge&) const = default;
    bool negative() const { return twentieths < 0; }
    std::string to_fraction() const;  // reduced "p/q"
};

enum class RuleId { S1, S2, PC, P5a, P5b, P6a, P6b, P7a, P7b, P7c, P8plus };
const char* to_string(RuleId r);

struct ElemRef {
    enum Kind { Vertex, Face } kind;
    int id;
    std::string to_string() const;
};

struct RuleApplication {
    RuleId rule;
    ElemRef from, to;
    Charge amount;
};

struct ChargeLedger {
    std::map<VertexId, Charge> vertex_charge;
    std::map<int, Charge> face_charge;
    std::vector<RuleApplication> log;

    Charge total() const;
};

// Initial charge: a d-vertex gets d-6 units, a d-face gets 2d-6 units; the
// total over a connected sphere instance is exactly -12.
ChargeLedger initial_charges(const PlaneGraph& g);

// Runs all redistribution rules on the initial ledger. The amounts depend
// only on the instance, never on intermediate charges, so the result is
// order-independent.
ChargeLedger apply_rules(const PlaneGraph& g);

// Guard shared by the distant-face rules P5a..P8plus: which rule fires for a
// neighbor w (of a pentagonal vertex) of degree dw whose 4-face flanks have
// degrees d1, d2, with the given sidedness. At most one rule applies.
std::optional<std::pair<RuleId, Charge>> distant_rule(int dw, int d1, int d2, Sidedness s);

struct AuditEntry {
    ElemRef elem;
    Charge final_charge;
    std::string nearest_kind;  // empty when none within the radius
    int distance = -1;
};

struct AuditReport {
    Charge total_initial, total_final;
    std::vector<RuleApplication> log;
    std::vector<AuditEntry> negatives;
    int anomaly_count = 0;  // negative elements with no configuration within radius 3

    std::string to_string() const;
};

// Runs the rules and reports totals, negative-final elements, and for each
// the nearest configuration within graph distance 3 (its absence is an
// anomaly, never silently accepted).
AuditReport audit(const PlaneGraph& g);

}  // namespace icc
