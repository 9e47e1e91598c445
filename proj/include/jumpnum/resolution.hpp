#pragma once

// Numerical data of the minimal embedded resolution: orders of the total
// transform and of the relative canonical divisor along each exceptional
// divisor, and the intersection matrix of all components.

#include <string>
#include <vector>

#include "jumpnum/cluster.hpp"

namespace jumpnum {

/// Components are indexed exceptional first (E0, E1, ... in point order),
/// then one strict transform component per branch (C1, C2, ...).
struct ResolutionData {
  int exceptional = 0;
  int strict = 0;
  std::vector<std::string> names;
  std::vector<long long> a;  // all components; strict ones carry the branch coefficient
  std::vector<long long> k;  // exceptional only
  std::vector<std::vector<long long>> intersection;
  std::vector<int> valence;  // exceptional only
  std::vector<std::vector<int>> proximate;  // exceptional p -> points proximate to p

  int size() const { return exceptional + strict; }
  long long self_intersection(int j) const { return intersection[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]; }
};

std::vector<long long> pullback_orders(const EnriquesDiagram& d);
std::vector<long long> canonical_orders(const EnriquesDiagram& d);
std::vector<std::vector<long long>> intersection_matrix(const EnriquesDiagram& d);
std::vector<int> valences(const std::vector<std::vector<long long>>& intersection, int exceptional);

/// Everything above at once. Throws InputError listing the violations when
/// the diagram does not validate, InvariantError if (pi^*C).E_j != 0.
ResolutionData resolve(const EnriquesDiagram& d);

/// Maximal chains of divisors created from E_j: each starts at a child of
/// p_j and continues through the successive points proximate to p_j.
std::vector<std::vector<int>> proximity_chains(const ResolutionData& r, int j);

/// (pi^*C).E_j for every exceptional j.
std::vector<long long> total_transform_products(const ResolutionData& r);

/// Dual graph in DOT format.
std::string to_dot(const ResolutionData& r);

}  // namespace jumpnum
