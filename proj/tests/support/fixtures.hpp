#pragma once

#include "jumpnum/cluster.hpp"
#include "jumpnum/resolution.hpp"

namespace jumpnum::testing {

inline EnriquesDiagram cusp34() { return build_diagram({{"C", CharExponents({3, 4}), 1}}, {}); }

/// (x^3 - y^2)(x^2 - y^3): two cusps with distinct tangents.
inline EnriquesDiagram two_cusps() {
  return build_diagram({{"A", CharExponents({2, 3}), 1}, {"B", CharExponents({2, 3}), 1}}, {{0, 1, 1}});
}

inline EnriquesDiagram node() { return build_diagram({{"A", CharExponents({1}), 1}, {"B", CharExponents({1}), 1}}, {}); }

}  // namespace jumpnum::testing
