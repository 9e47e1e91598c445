#include "bivariate.hpp"

#include <algorithm>
#include <optional>

#include "jumpnum/errors.hpp"

namespace jumpnum::detail {
namespace {

void trim(YPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int deg(const YPoly& f) { return static_cast<int>(f.size()) - 1; }

/// a - c * y^shift * b
YPoly sub_scaled(YPoly a, const UniPoly& c, int shift, const YPoly& b) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), UniPoly());
  for (std::size_t j = 0; j < b.size(); ++j) a[j + static_cast<std::size_t>(shift)] -= c * b[j];
  trim(a);
  return a;
}

YPoly derivative(const YPoly& f) {
  YPoly r;
  for (std::size_t j = 1; j < f.size(); ++j) r.push_back(f[j].scaled(Elem(Field::rationals(), Rational(static_cast<long long>(j)))));
  trim(r);
  return r;
}

YPoly sub(const YPoly& a, const YPoly& b) { return sub_scaled(a, UniPoly::constant(Field::rationals()->one()), 0, b); }

}  // namespace

YPoly to_ypoly(const Poly2& f) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& [m, c] : f.terms()) {
    if (rows.size() <= static_cast<std::size_t>(m.second)) rows.resize(static_cast<std::size_t>(m.second) + 1);
    auto& row = rows[static_cast<std::size_t>(m.second)];
    if (row.size() <= static_cast<std::size_t>(m.first)) row.resize(static_cast<std::size_t>(m.first) + 1, Rational(0));
    row[static_cast<std::size_t>(m.first)] = c;
  }
  YPoly out;
  for (const auto& row : rows) out.push_back(UniPoly::from_rationals(row));
  trim(out);
  return out;
}

Poly2 from_ypoly(const YPoly& f) {
  Poly2 out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto& cs = f[j].coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) out += Poly2::monomial(cs[i].rational(), static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

YPoly primitive_part(const YPoly& f) {
  if (f.empty()) return f;
  UniPoly g;
  for (const auto& c : f) g = gcd(g, c);
  // Also fix the sign and scale: the leading x-coefficient of the leading y-coefficient becomes 1.
  const Elem unit = divmod(f.back(), g).first.lead();
  YPoly r;
  for (const auto& c : f) r.push_back(divmod(c, g).first.scaled(unit.inverse()));
  return r;
}

namespace {

std::optional<YPoly> try_quotient(const YPoly& a, const YPoly& b) {
  YPoly rem = a, q;
  while (!rem.empty() && deg(rem) >= deg(b)) {
    const int shift = deg(rem) - deg(b);
    auto [c, r] = divmod(rem.back(), b.back());
    if (!r.is_zero()) return std::nullopt;
    if (q.size() <= static_cast<std::size_t>(shift)) q.resize(static_cast<std::size_t>(shift) + 1, UniPoly());
    q[static_cast<std::size_t>(shift)] = c;
    rem = sub_scaled(rem, c, shift, b);
  }
  if (!rem.empty()) return std::nullopt;
  trim(q);
  return q;
}

/// Newton interpolation through (xs[i], ys[i]).
UniPoly interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = n - 1; i >= k; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
  }
  const FieldPtr Q = Field::rationals();
  UniPoly p = UniPoly::constant(Elem(Q, ys[n - 1]));
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * UniPoly::from_rationals({-xs[i], Rational(1)}) + UniPoly::constant(Elem(Q, ys[i]));
  }
  return p;
}

UniPoly eval_x(const YPoly& f, const Rational& x0) {
  const FieldPtr Q = Field::rationals();
  std::vector<Elem> c;
  for (const auto& coef : f) c.push_back(coef.eval(Elem(Q, x0)));
  return UniPoly(Q, c);
}

int x_degree(const YPoly& f) {
  int d = 0;
  for (const auto& c : f) d = std::max(d, c.degree());
  return d;
}

}  // namespace

YPoly exact_quotient(const YPoly& a, const YPoly& b) {
  if (b.empty()) throw InvariantError("division by the zero polynomial");
  auto q = try_quotient(a, b);
  if (!q) throw InvariantError("inexact bivariate division");
  return *q;
}

YPoly gcd_y(const YPoly& a0, const YPoly& b0) {
  const YPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.empty()) return b;
  if (b.empty()) return a;
  const YPoly one{UniPoly::constant(Field::rationals()->one())};
  if (deg(a) == 0 || deg(b) == 0) return one;
  // Images at x = x0 of the gcd, scaled so that their leading coefficient is gamma(x0).
  const UniPoly gamma = gcd(a.back(), b.back());
  const std::size_t need = static_cast<std::size_t>(gamma.degree() + std::min(x_degree(a), x_degree(b)) + 1);
  const FieldPtr Q = Field::rationals();
  std::vector<Rational> xs;
  std::vector<UniPoly> images;
  int best = -1;
  for (long long k = 0; k < 4000; ++k) {
    const Rational x0(k % 2 == 0 ? k / 2 : -(k + 1) / 2);
    const Elem e(Q, x0);
    if (a.back().eval(e).is_zero() || b.back().eval(e).is_zero()) continue;
    const UniPoly g = gcd(eval_x(a, x0), eval_x(b, x0));
    if (g.degree() == 0) return one;
    if (best >= 0 && g.degree() > best) continue;
    if (g.degree() < best || best < 0) {
      best = g.degree();
      xs.clear();
      images.clear();
    }
    xs.push_back(x0);
    images.push_back(g.scaled(gamma.eval(e)));
    if (xs.size() < need) continue;
    YPoly h;
    for (int j = 0; j <= best; ++j) {
      std::vector<Rational> ys;
      for (const auto& im : images) ys.push_back(im.coeff(j).rational());
      h.push_back(interpolate(xs, ys));
    }
    trim(h);
    h = primitive_part(h);
    if (try_quotient(a, h) && try_quotient(b, h)) return h;
  }
  throw InvariantError("bivariate gcd did not stabilize");
}

std::vector<std::pair<Poly2, int>> squarefree_decomposition(const Poly2& f) {
  std::vector<std::pair<Poly2, int>> out;
  YPoly p = primitive_part(to_ypoly(f));
  if (p.empty() || deg(p) == 0) return out;
  const YPoly a0 = gcd_y(p, derivative(p));
  YPoly b = exact_quotient(p, a0);
  YPoly c = exact_quotient(derivative(p), a0);
  YPoly d = sub(c, derivative(b));
  for (int i = 1; deg(b) > 0; ++i) {
    const YPoly a = gcd_y(b, d);
    if (deg(a) > 0) out.emplace_back(from_ypoly(a), i);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = sub(c, derivative(b));
  }
  return out;
}

}  // namespace jumpnum::detail
