#include "jumpnum/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "jumpnum/errors.hpp"
#include "jumpnum/factor.hpp"

namespace jumpnum {
namespace {

long long cross(const Monomial& a, const Monomial& b, const Monomial& c) {
  return static_cast<long long>(b.first - a.first) * (c.second - a.second) -
         static_cast<long long>(b.second - a.second) * (c.first - a.first);
}

std::vector<const Facet*> facets(const NewtonPolygon& np) {
  std::vector<const Facet*> out;
  for (const auto& e : np.edges) out.push_back(&e);
  out.push_back(&np.vertical);
  out.push_back(&np.horizontal);
  return out;
}

}  // namespace

NewtonPolygon polygon(const Poly2& f) {
  if (f.is_zero()) throw InputError("the zero polynomial defines no germ");
  if (!f.coeff(0, 0).is_zero()) throw InputError("f does not vanish at the origin");
  NewtonPolygon np;
  std::map<int, int> lowest;
  for (const auto& [m, c] : f.terms()) {
    np.support.push_back(m);
    auto it = lowest.find(m.first);
    if (it == lowest.end() || m.second < it->second) lowest[m.first] = m.second;
  }
  std::vector<Monomial> stair;
  for (const auto& [i, j] : lowest) {
    if (stair.empty() || j < stair.back().second) stair.push_back({i, j});
  }
  for (const auto& pt : stair) {
    while (np.vertices.size() >= 2 && cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), pt) <= 0) np.vertices.pop_back();
    np.vertices.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < np.vertices.size(); ++k) {
    const auto& a = np.vertices[k];
    const auto& b = np.vertices[k + 1];
    long long p = a.second - b.second, q = b.first - a.first;
    const long long g = std::gcd(p, q);
    p /= g;
    q /= g;
    np.edges.push_back({p, q, p * a.first + q * a.second, a, b});
  }
  const auto& left = np.vertices.front();
  const auto& bottom = np.vertices.back();
  np.vertical = {1, 0, left.first, left, left};
  np.horizontal = {0, 1, bottom.second, bottom, bottom};
  return np;
}

bool nondegenerate(const Poly2& f) {
  const NewtonPolygon np = polygon(f);
  for (const auto& e : np.edges) {
    const long long steps = (e.to.first - e.from.first) / e.q;
    std::vector<Rational> coeffs;
    for (long long k = 0; k <= steps; ++k) {
      coeffs.push_back(f.coeff(static_cast<int>(e.from.first + k * e.q), static_cast<int>(e.from.second - k * e.p)));
    }
    for (const auto& [factor, mult] : squarefree_part(UniPoly::from_rationals(coeffs))) {
      if (mult > 1 && factor.degree() > 0) return false;
    }
  }
  return true;
}

Rational monomial_threshold(const NewtonPolygon& np, long long a, long long b) {
  bool have = false;
  Rational best;
  for (const Facet* f : facets(np)) {
    if (f->c == 0) continue;
    const Rational t(f->p * (a + 1) + f->q * (b + 1), f->c);
    if (!have || t < best) best = t;
    have = true;
  }
  if (!have) throw InputError("f is a unit at the origin");
  return best;
}

std::set<Rational> oracle_jumping_numbers(const Poly2& f, const Rational& bound) {
  if (bound <= Rational(0) || bound > Rational(1)) throw InputError("oracle bound must lie in (0, 1]");
  if (!nondegenerate(f)) throw InputError("f is degenerate with respect to its Newton polygon");
  const NewtonPolygon np = polygon(f);
  // Past these caps every facet involving a (resp. b) exceeds the bound.
  long long cap_a = 0, cap_b = 0;
  for (const Facet* fa : facets(np)) {
    if (fa->c == 0) continue;
    if (fa->p > 0) cap_a = std::max(cap_a, to_int64((bound * Rational(fa->c) / Rational(fa->p)).ceil()));
    if (fa->q > 0) cap_b = std::max(cap_b, to_int64((bound * Rational(fa->c) / Rational(fa->q)).ceil()));
  }
  std::set<Rational> out;
  for (long long a = 0; a <= cap_a; ++a) {
    for (long long b = 0; b <= cap_b; ++b) {
      const Rational t = monomial_threshold(np, a, b);
      if (t <= bound && t < Rational(1)) out.insert(t);
    }
  }
  return out;
}

}  // namespace jumpnum
