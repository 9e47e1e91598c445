#pragma once

// Exact fields: the rationals and towers of simple algebraic extensions over
// them, with univariate polynomials over any field of the tower.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jumpnum/rational.hpp"

namespace jumpnum {

class Field;
class UniPoly;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of a Field. Over Q it is a Rational; over an extension
/// F = B[t]/(mu) it is the canonical residue (degree < deg mu) with
/// coefficients in B.
class Elem {
 public:
  Elem();  // rational zero
  explicit Elem(FieldPtr field);  // zero of `field`
  Elem(FieldPtr field, const Rational& q);

  /// Residue of sum c_i t^i modulo the minimal polynomial of `field`.
  static Elem from_coeffs(FieldPtr field, std::vector<Elem> coeffs);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Value over Q. Precondition: field is Q.
  const Rational& rational() const { return q_; }
  /// Residue coefficients over the base field (trimmed). Precondition: field is an extension.
  const std::vector<Elem>& coeffs() const { return c_; }

  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  Elem& operator/=(const Elem& o);
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  friend Elem operator/(Elem a, const Elem& b) { return a /= b; }
  friend bool operator==(const Elem& a, const Elem& b);

  /// Throws std::domain_error when the element is zero.
  Elem inverse() const;
  Elem pow(long long n) const;

  std::string to_string() const;

 private:
  friend class Field;
  FieldPtr field_;
  Rational q_;
  std::vector<Elem> c_;
};

/// Dense univariate polynomial over a Field; the leading coefficient is
/// nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly();  // zero over Q
  explicit UniPoly(FieldPtr field);
  UniPoly(FieldPtr field, std::vector<Elem> coeffs);
  static UniPoly from_rationals(const std::vector<Rational>& coeffs);
  static UniPoly constant(const Elem& c);
  static UniPoly monomial(const Elem& c, int degree);
  static UniPoly variable(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(int i) const;
  const Elem& lead() const { return c_.back(); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Elem& c) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  UniPoly monic() const;
  UniPoly derivative() const;
  Elem eval(const Elem& x) const;
  /// p(t + s)
  UniPoly shifted(const Elem& s) const;
  /// Coefficientwise embedding into a field that contains this one.
  UniPoly lifted(const FieldPtr& target) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtGcd {
  UniPoly g;  // monic
  UniPoly s;
  UniPoly t;  // s*a + t*b == g
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

/// Q, or a simple extension B(alpha) with alpha a root of an irreducible
/// monic polynomial over B. Immutable; shared between elements.
class Field {
 public:
  static FieldPtr rationals();
  /// Adjoins a root of `minimal` (normalized to monic). Throws
  /// std::invalid_argument if degree < 2 or the polynomial is reducible.
  static FieldPtr extend(const UniPoly& minimal);
  /// Same, with irreducibility assumed (internal use when the polynomial
  /// comes from a factorization).
  static FieldPtr extend_unchecked(const UniPoly& minimal);

  bool is_rational() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  const UniPoly& modulus() const { return *modulus_; }
  int degree() const;
  int depth() const { return depth_; }
  long long absolute_degree() const;

  Elem zero() const;
  Elem one() const;
  Elem from_rational(const Rational& q) const;
  /// The adjoined root. Precondition: not Q.
  Elem generator() const;
  /// Embeds an element of this field or of a field below it in the tower.
  Elem lift(const Elem& e) const;
  /// Canonical residue of a polynomial over the base field.
  Elem reduce(const UniPoly& residue) const;
  /// True if `other` is this field or lies below it in the tower.
  bool contains(const Field* other) const;

  FieldPtr self() const;
  std::string generator_name() const;

  Field(FieldPtr base, std::shared_ptr<const UniPoly> modulus, int depth);

 private:
  FieldPtr base_;
  std::shared_ptr<const UniPoly> modulus_;
  int depth_ = 0;
  std::weak_ptr<const Field> self_;
};

/// Field containing both a and b when one lies below the other in a tower;
/// throws std::invalid_argument otherwise.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace jumpnum
