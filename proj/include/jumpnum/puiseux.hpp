#pragma once

// Newton-Puiseux frontend: from a polynomial f(x, y) over Q to the branches
// of its germ at the origin, their characteristic exponents, coefficients
// and pairwise contacts.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jumpnum/branch.hpp"
#include "jumpnum/cluster.hpp"
#include "jumpnum/field.hpp"
#include "jumpnum/poly2.hpp"

namespace jumpnum {

/// Integers, p/q literals, x, y, + - * ^ and parentheses. Multiplication
/// must be explicit. Throws ParseError with the offending offset.
Poly2 parse_polynomial(std::string_view text);

namespace detail {
struct Expansion;
}

/// One analytic branch over C. Conjugate branches (one irreducible factor
/// over the coefficient field of the expansion) share a class.
struct BranchResult {
  std::string name;
  CharExponents exponents;
  long long coefficient = 1;  // multiplicity of the branch as a factor of f
  int conjugacy_class = 0;
  int class_size = 1;
  /// Infinitely near points shared with each branch, by index; 0 on the diagonal.
  std::vector<int> shared;
  std::shared_ptr<const detail::Expansion> expansion;
};

/// Branches of f at the origin. Coordinates are first changed by
/// x -> x + c*y with the smallest |c| making no branch tangent to x = 0.
/// Throws InputError if f is zero or does not vanish at the origin, and
/// ExtensionDepthError if a branch needs a tower of more than max_depth
/// simple extensions.
std::vector<BranchResult> puiseux_branches(const Poly2& f, int max_depth = 2);

/// The constant c of the coordinate change used by puiseux_branches.
long long shear_constant(const Poly2& f);

EnriquesDiagram to_diagram(const std::vector<BranchResult>& branches);

/// Truncated parametrization of a branch class in the original coordinates:
/// x(t), y(t) mod t^terms over the field of the expansion.
struct Parametrization {
  FieldPtr field;
  std::vector<Elem> x;
  std::vector<Elem> y;
};
Parametrization parametrize(const BranchResult& b, int terms);

}  // namespace jumpnum
