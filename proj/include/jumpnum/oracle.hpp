#pragma once

// Jumping numbers of Newton-nondegenerate germs read off the Newton
// polyhedron. Independent of the resolution machinery.

#include <set>
#include <vector>

#include "jumpnum/poly2.hpp"

namespace jumpnum {

/// Supporting line p*x + q*y = c of the Newton polyhedron. Compact edges
/// have p, q > 0 coprime; the two unbounded facets are (1,0) and (0,1).
struct Facet {
  long long p = 0;
  long long q = 0;
  long long c = 0;
  Monomial from;  // endpoint with the larger y exponent
  Monomial to;    // unbounded facets repeat the vertex
};

struct NewtonPolygon {
  std::vector<Monomial> support;
  std::vector<Monomial> vertices;  // by increasing x exponent
  std::vector<Facet> edges;        // compact edges, in vertex order
  Facet vertical;                  // x = leftmost x exponent
  Facet horizontal;                // y = lowest y exponent
};

/// Throws InputError when f is zero or a unit at the origin.
NewtonPolygon polygon(const Poly2& f);

/// True when every compact edge polynomial is squarefree away from t = 0.
bool nondegenerate(const Poly2& f);

/// Sup of the lambda for which x^a y^b is not in the multiplier ideal of
/// the monomial (Newton) ideal, i.e. min over facets with c > 0 of
/// (p(a+1) + q(b+1))/c.
Rational monomial_threshold(const NewtonPolygon& np, long long a, long long b);

/// Thresholds in (0, min(bound, 1)); 0 < bound <= 1. Throws InputError on
/// degenerate f or a bound outside that range.
std::set<Rational> oracle_jumping_numbers(const Poly2& f, const Rational& bound = Rational(1));

}  // namespace jumpnum
