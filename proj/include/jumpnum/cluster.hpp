#pragma once

// Enriques diagrams: the infinitely near points blown up by the minimal
// embedded resolution of a (possibly reducible, non-reduced) curve germ.

#include <optional>
#include <string>
#include <vector>

#include "jumpnum/branch.hpp"

namespace jumpnum {

struct Point {
  int id = 0;
  int parent = -1;  // -1 for the origin
  int extra = -1;   // second proximity of a satellite point, else -1

  PointKind kind() const { return extra >= 0 ? PointKind::satellite : PointKind::free_point; }
  /// Parent first, then the extra target.
  std::vector<int> proximities() const;
};

struct DiagramBranch {
  std::string name;
  std::optional<CharExponents> exponents;
  long long coefficient = 1;
  std::vector<int> path;                   // point ids from the origin
  std::vector<long long> multiplicities;  // branch multiplicity at each path point
};

/// Points are stored with id == index and every parent listed before its
/// children.
struct EnriquesDiagram {
  std::vector<Point> points;
  std::vector<DiagramBranch> branches;

  /// Sum over branches through p of coefficient * multiplicity.
  std::vector<long long> total_multiplicities() const;
  /// For each p, the points proximate to p in increasing order.
  std::vector<std::vector<int>> proximate_points() const;
  std::vector<std::vector<int>> children() const;
};

struct BranchSpec {
  std::string name;
  CharExponents exponents;
  long long coefficient = 1;
};

/// Number of infinitely near points shared by branches a and b (indices).
struct Contact {
  int a = 0;
  int b = 0;
  int shared = 1;
};

/// Merges the branches' point sequences along their shared prefixes.
/// Omitted pairs share only the origin. Throws InputError on inconsistent
/// contacts. Points are numbered level by level; within a level by the
/// first branch (in input order) passing through them.
EnriquesDiagram build_diagram(const std::vector<BranchSpec>& branches, const std::vector<Contact>& contacts);

/// Violations found in d; empty when d is the diagram of a minimal
/// embedded resolution. Never throws.
std::vector<std::string> validate(const EnriquesDiagram& d);

}  // namespace jumpnum
