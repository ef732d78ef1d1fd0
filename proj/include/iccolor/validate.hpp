#pragma once

#include <string>
#include <vector>

#include "iccolor/plane_graph.hpp"

namespace icc {

struct ValidationReport {
    std::vector<std::string> violations;
    bool admissible() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks the instance against the hypotheses the colorer needs: connected
// sphere embedding, no loops, every face of size 3 or 4, and the vertex sets
// of any two 4-faces disjoint. Report-based; never throws.
ValidationReport validate_hypotheses(const PlaneGraph& g);

// Relaxed variant for the degeneracy colorer: faces of size >= 4 allowed,
// but all of them pairwise vertex-disjoint.
ValidationReport validate_disjoint_big_faces(const PlaneGraph& g);

}  // namespace icc
