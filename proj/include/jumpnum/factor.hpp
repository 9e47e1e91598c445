#pragma once

#include <utility>
#include <vector>

#include "jumpnum/field.hpp"

namespace jumpnum {

/// Squarefree decomposition: monic, pairwise coprime, squarefree factors
/// with their multiplicities, ordered by multiplicity. The product of
/// factor^multiplicity equals p up to a unit. Throws std::invalid_argument
/// on the zero polynomial.
std::vector<std::pair<UniPoly, int>> squarefree_part(const UniPoly& p);

/// Monic irreducible factors over Q of a squarefree polynomial over Q.
std::vector<UniPoly> factor_rational(const UniPoly& p);

/// Monic irreducible factors of a squarefree polynomial over any field of
/// an extension tower (norm method, bottoming out in factor_rational).
std::vector<UniPoly> factor_irreducible(const UniPoly& p);

/// Complete factorization: monic irreducible factors with multiplicities.
std::vector<std::pair<UniPoly, int>> factor(const UniPoly& p);

/// N_{F/B}(e) for e in an extension F of B.
Elem norm(const Elem& e);

}  // namespace jumpnum
