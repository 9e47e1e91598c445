#pragma once

#include <map>
#include <string>
#include <utility>

#include "jumpnum/rational.hpp"

namespace jumpnum {

/// Exponent pair (i, j) of the monomial x^i y^j.
using Monomial = std::pair<int, int>;

/// Sparse polynomial in x and y over Q. Zero coefficients are never stored.
class Poly2 {
 public:
  Poly2() = default;
  Poly2(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly2 monomial(const Rational& c, int i, int j);
  static Poly2 x() { return monomial(Rational(1), 1, 0); }
  static Poly2 y() { return monomial(Rational(1), 0, 1); }

  const std::map<Monomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(int i, int j) const;
  /// Smallest total degree of a term. Throws std::domain_error on zero.
  int order() const;
  int total_degree() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.t_ == b.t_; }
  Poly2 pow(int n) const;

  /// Terms by decreasing total degree, e.g. "x^5 - x^3*y^3 - x^2*y^2 + y^5".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> t_;
};

}  // namespace jumpnum
