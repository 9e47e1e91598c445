#include "jumpnum/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zassenhaus.hpp"

namespace jumpnum {
namespace {

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }

Elem determinant(std::vector<std::vector<Elem>> m, const FieldPtr& field) {
  const std::size_t n = m.size();
  Elem det = field->one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return field->zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Elem inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Elem f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Polynomial over `field` through (x_i, y_i), Newton form.
UniPoly interpolate(const std::vector<Elem>& xs, const std::vector<Elem>& ys, const FieldPtr& field) {
  const std::size_t n = xs.size();
  std::vector<Elem> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  }
  UniPoly result(field);
  const UniPoly t = UniPoly::variable(field);
  for (std::size_t i = n; i-- > 0;) {
    result = result * (t - UniPoly::constant(xs[i])) + UniPoly::constant(dd[i]);
  }
  return result;
}

/// Norm of g from its field down to the base field, as a polynomial.
UniPoly poly_norm(const UniPoly& g) {
  const FieldPtr& k = g.field();
  const FieldPtr& b = k->base();
  const int d = g.degree() * k->degree();
  std::vector<Elem> xs, ys;
  for (int i = 0; i <= d; ++i) {
    const Elem x = b->from_rational(Rational(i));
    xs.push_back(x);
    ys.push_back(norm(g.eval(k->lift(x))));
  }
  return interpolate(xs, ys, b);
}

bool is_squarefree(const UniPoly& p) { return gcd(p, p.derivative()).degree() == 0; }

Rational shift_value(int i) {
  // 0, 1, -1, 2, -2, ...
  const long long v = (i + 1) / 2;
  return Rational(i % 2 == 1 ? v : -v);
}

void sort_factors(std::vector<UniPoly>& fs) {
  std::stable_sort(fs.begin(), fs.end(), [](const UniPoly& a, const UniPoly& b) { return a.degree() < b.degree(); });
}

}  // namespace

Elem norm(const Elem& e) {
  const FieldPtr& f = e.field();
  if (f->is_rational()) return e;
  const FieldPtr& b = f->base();
  const int n = f->degree();
  std::vector<std::vector<Elem>> m(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n), b->zero()));
  Elem col = e;
  const Elem alpha = f->generator();
  for (int j = 0; j < n; ++j) {
    const auto& cs = col.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) m[i][static_cast<std::size_t>(j)] = cs[i];
    col *= alpha;
  }
  return determinant(std::move(m), b);
}

std::vector<std::pair<UniPoly, int>> squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  const UniPoly dp = p.derivative();
  const UniPoly a0 = gcd(p, dp);
  UniPoly b = exact_quotient(p, a0);
  UniPoly c = exact_quotient(dp, a0);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    const UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<UniPoly> factor_rational(const UniPoly& p) {
  if (!p.field()->is_rational()) throw std::invalid_argument("factor_rational needs a polynomial over Q");
  if (p.degree() < 1) return {};
  if (p.degree() == 1) return {p.monic()};
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.rational().denominator());
  detail::ZPoly z;
  for (const auto& c : p.coeffs()) z.push_back((c.rational() * Rational(l)).numerator());
  std::vector<UniPoly> out;
  for (const auto& f : detail::factor_primitive_squarefree(z)) {
    std::vector<Rational> cs(f.begin(), f.end());
    out.push_back(UniPoly::from_rationals(cs).monic());
  }
  sort_factors(out);
  return out;
}

std::vector<UniPoly> factor_irreducible(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factorization of the zero polynomial");
  if (p.degree() < 1) return {};
  if (p.degree() == 1) return {p.monic()};
  const FieldPtr& k = p.field();
  if (k->is_rational()) return factor_rational(p);
  const Elem alpha = k->generator();
  for (int i = 0;; ++i) {
    const Elem s = k->from_rational(shift_value(i));
    const UniPoly gs = p.shifted(-(s * alpha));
    const UniPoly n = poly_norm(gs);
    if (!is_squarefree(n)) continue;
    std::vector<UniPoly> out;
    for (const auto& ni : factor_irreducible(n)) {
      const UniPoly h = gcd(gs, ni.lifted(k));
      if (h.degree() > 0) out.push_back(h.shifted(s * alpha).monic());
    }
    sort_factors(out);
    return out;
  }
}

std::vector<std::pair<UniPoly, int>> factor(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  for (const auto& [s, m] : squarefree_part(p)) {
    for (auto& f : factor_irreducible(s)) out.emplace_back(std::move(f), m);
  }
  return out;
}

}  // namespace jumpnum
