#include "jumpnum/poly2.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace jumpnum {

Poly2::Poly2(const Rational& c) { add_term({0, 0}, c); }

Poly2 Poly2::monomial(const Rational& c, int i, int j) {
  Poly2 p;
  p.add_term({i, j}, c);
  return p;
}

void Poly2::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Rational Poly2::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Rational(0) : it->second;
}

int Poly2::order() const {
  if (t_.empty()) throw std::domain_error("order of the zero polynomial");
  int best = -1;
  for (const auto& [m, c] : t_) {
    if (best < 0 || m.first + m.second < best) best = m.first + m.second;
  }
  return best;
}

int Poly2::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : t_) best = std::max(best, m.first + m.second);
  return best;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, ca] : a.t_) {
    for (const auto& [mb, cb] : b.t_) r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
  }
  return r;
}

Poly2 Poly2::pow(int n) const {
  if (n < 0) throw std::domain_error("negative power");
  Poly2 r(Rational(1)), base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

std::string Poly2::to_string() const {
  if (t_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> v(t_.begin(), t_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& p, const auto& q) {
    const int dp = p.first.first + p.first.second, dq = q.first.first + q.first.second;
    if (dp != dq) return dp > dq;
    return p.first.first > q.first.first;
  });
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& [m, c] = v[k];
    Rational a = c;
    if (k == 0) {
      if (a.sign() < 0) s += "-";
    } else {
      s += a.sign() < 0 ? " - " : " + ";
    }
    if (a.sign() < 0) a = -a;
    std::vector<std::string> parts;
    if (a != Rational(1) || (m.first == 0 && m.second == 0)) parts.push_back(a.to_string());
    if (m.first > 0) parts.push_back(m.first == 1 ? "x" : "x^" + std::to_string(m.first));
    if (m.second > 0) parts.push_back(m.second == 1 ? "y" : "y^" + std::to_string(m.second));
    for (std::size_t p = 0; p < parts.size(); ++p) s += (p ? "*" : "") + parts[p];
  }
  return s;
}

}  // namespace jumpnum
