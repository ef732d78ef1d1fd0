#include "iccolor/validate.hpp"

#include <map>
#include <sstream>

namespace icc {

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v << '\n';
    return os.str();
}

namespace {

void check_basics(const PlaneGraph& g, ValidationReport& r) {
    if (g.n_vertices() == 0) {
        r.violations.push_back("empty graph");
        return;
    }
    for (VertexId v : g.vertices()) {
        if (g.degree(v) == 0) r.violations.push_back("isolated vertex " + std::to_string(v));
        for (VertexId w : g.neighbors(v))
            if (w == v) {
                r.violations.push_back("loop at vertex " + std::to_string(v));
                break;
            }
    }
    if (g.n_components() > 1)
        r.violations.push_back("disconnected (" + std::to_string(g.n_components()) +
                               " components)");
    if (!g.is_sphere()) r.violations.push_back("not a sphere embedding (Euler check failed)");
}

void check_big_face_disjointness(const PlaneGraph& g, const char* label, ValidationReport& r) {
    std::map<VertexId, int> first_big;  // vertex -> big face id
    for (int f = 0; f < g.n_faces(); ++f) {
        if (g.face(f).size() < 4) continue;
        for (VertexId v : g.face_vertices(f)) {
            auto ins = first_big.emplace(v, f);
            if (!ins.second && ins.first->second != f) {
                std::ostringstream os;
                os << label << " share vertices: f" << ins.first->second << " and f" << f
                   << " at v" << v;
                r.violations.push_back(os.str());
            }
        }
    }
}

}  // namespace

ValidationReport validate_hypotheses(const PlaneGraph& g) {
    ValidationReport r;
    check_basics(g, r);
    for (int f = 0; f < g.n_faces(); ++f) {
        int s = g.face(f).size();
        if (s != 3 && s != 4)
            r.violations.push_back("face of size " + std::to_string(s) + " (f" +
                                   std::to_string(f) + ") outside {3,4}");
    }
    check_big_face_disjointness(g, "4-faces", r);
    return r;
}

ValidationReport validate_disjoint_big_faces(const PlaneGraph& g) {
    ValidationReport r;
    check_basics(g, r);
    for (int f = 0; f < g.n_faces(); ++f)
        if (g.face(f).size() < 3)
            r.violations.push_back("face of size " + std::to_string(g.face(f).size()) + " (f" +
                                   std::to_string(f) + ")");
    check_big_face_disjointness(g, "big faces", r);
    return r;
}

}  // namespace icc
