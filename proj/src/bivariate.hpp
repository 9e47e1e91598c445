#pragma once

// Polynomials in y with coefficients in Q[x]: gcd and squarefree
// decomposition, enough to split a curve into reduced components.

#include <utility>
#include <vector>

#include "jumpnum/field.hpp"
#include "jumpnum/poly2.hpp"

namespace jumpnum::detail {

/// sum_j c[j](x) y^j; trailing zero coefficients are trimmed.
using YPoly = std::vector<UniPoly>;

YPoly to_ypoly(const Poly2& f);
Poly2 from_ypoly(const YPoly& f);

/// Divides out the gcd of the coefficients (the content in Q[x]).
YPoly primitive_part(const YPoly& f);
/// Primitive gcd of two polynomials, primitive part of the result.
YPoly gcd_y(const YPoly& a, const YPoly& b);
/// a / b where b divides a; throws InvariantError otherwise.
YPoly exact_quotient(const YPoly& a, const YPoly& b);

/// Primitive squarefree factors of the primitive part of f (as a polynomial
/// in y), paired with their multiplicities. Factors free of y are dropped.
std::vector<std::pair<Poly2, int>> squarefree_decomposition(const Poly2& f);

}  // namespace jumpnum::detail
