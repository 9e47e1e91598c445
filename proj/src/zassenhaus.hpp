#pragma once

#include <vector>

#include "jumpnum/rational.hpp"

namespace jumpnum::detail {

/// Dense integer polynomial, index = degree.
using ZPoly = std::vector<Integer>;

/// Irreducible factors over Z of a primitive, squarefree integer polynomial
/// of positive degree (Berlekamp-Zassenhaus: Cantor-Zassenhaus modulo a
/// small prime, Hensel lifting, exhaustive recombination).
std::vector<ZPoly> factor_primitive_squarefree(const ZPoly& f);

}  // namespace jumpnum::detail
