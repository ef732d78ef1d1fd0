#pragma once

#include <optional>

#include "iccolor/configuration.hpp"

namespace icc {

// First match in the fixed priority order (SepCycle2, SepCycle3, LowDegree,
// NonPentagonalFive, SquareFiveFive, CloseFiveOnQuad, CloseSixOnQuad,
// Pentagon65, Pentagon66), lowest ids first within each kind. nullopt only
// when no configuration exists anywhere.
std::optional<ConfigurationMatch> find_configuration(const PlaneGraph& g);

// Every match of every kind; used by the discharge audit diagnostics.
std::vector<ConfigurationMatch> find_all_configurations(const PlaneGraph& g);

}  // namespace icc
