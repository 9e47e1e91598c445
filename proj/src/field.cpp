#include "jumpnum/field.hpp"

#include <sstream>
#include <stdexcept>

#include "jumpnum/factor.hpp"

namespace jumpnum {

// ---------------------------------------------------------------- Field

Field::Field(FieldPtr base, std::shared_ptr<const UniPoly> modulus, int depth)
    : base_(std::move(base)), modulus_(std::move(modulus)), depth_(depth) {}

FieldPtr Field::rationals() {
  static const FieldPtr q = [] {
    auto f = std::make_shared<Field>(nullptr, nullptr, 0);
    f->self_ = f;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::extend_unchecked(const UniPoly& minimal) {
  if (minimal.degree() < 2) throw std::invalid_argument("extension needs a minimal polynomial of degree >= 2");
  auto mod = std::make_shared<const UniPoly>(minimal.monic());
  auto f = std::make_shared<Field>(minimal.field(), mod, minimal.field()->depth() + 1);
  f->self_ = f;
  return f;
}

FieldPtr Field::extend(const UniPoly& minimal) {
  if (minimal.degree() < 2) throw std::invalid_argument("extension needs a minimal polynomial of degree >= 2");
  const auto sq = squarefree_part(minimal);
  if (sq.size() != 1 || sq.front().second != 1 || factor_irreducible(sq.front().first).size() != 1) {
    throw std::invalid_argument("minimal polynomial " + minimal.to_string() + " is reducible");
  }
  return extend_unchecked(minimal);
}

FieldPtr Field::self() const { return self_.lock(); }

int Field::degree() const { return is_rational() ? 1 : modulus_->degree(); }

long long Field::absolute_degree() const {
  long long d = 1;
  for (const Field* f = this; f && !f->is_rational(); f = f->base_.get()) d *= f->degree();
  return d;
}

Elem Field::zero() const { return Elem(self()); }

Elem Field::one() const { return Elem(self(), Rational(1)); }

Elem Field::from_rational(const Rational& q) const { return Elem(self(), q); }

Elem Field::generator() const {
  if (is_rational()) throw std::logic_error("Q has no adjoined generator");
  return Elem::from_coeffs(self(), {base_->zero(), base_->one()});
}

bool Field::contains(const Field* other) const {
  for (const Field* f = this; f; f = f->base_.get()) {
    if (f == other) return true;
  }
  return false;
}

Elem Field::lift(const Elem& e) const {
  if (e.field().get() == this) return e;
  if (!contains(e.field().get())) throw std::invalid_argument("element does not belong to a subfield");
  Elem r(self());
  Elem inner = base_->lift(e);
  if (!inner.is_zero()) r.c_.push_back(std::move(inner));
  return r;
}

Elem Field::reduce(const UniPoly& residue) const { return Elem::from_coeffs(self(), residue.coeffs()); }

std::string Field::generator_name() const { return "a" + std::to_string(depth_); }

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  if (a->contains(b.get())) return a;
  if (b->contains(a.get())) return b;
  throw std::invalid_argument("elements live in unrelated fields");
}

// ---------------------------------------------------------------- Elem

Elem::Elem() : field_(Field::rationals()) {}

Elem::Elem(FieldPtr field) : field_(std::move(field)) {}

Elem::Elem(FieldPtr field, const Rational& q) : field_(std::move(field)) {
  if (field_->is_rational()) {
    q_ = q;
  } else if (!q.is_zero()) {
    c_.push_back(Elem(field_->base(), q));
  }
}

Elem Elem::from_coeffs(FieldPtr field, std::vector<Elem> coeffs) {
  if (field->is_rational()) {
    Rational v;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0 && !coeffs[i].is_zero()) throw std::invalid_argument("Q has no generator");
    }
    if (!coeffs.empty()) v = Field::rationals()->lift(coeffs.front()).q_;
    return Elem(field, v);
  }
  UniPoly p(field->base(), std::move(coeffs));
  if (p.degree() >= field->degree()) p = divmod(p, field->modulus()).second;
  Elem r(field);
  r.c_ = p.coeffs();
  return r;
}

bool Elem::is_zero() const { return field_->is_rational() ? q_.is_zero() : c_.empty(); }

bool Elem::is_one() const {
  if (field_->is_rational()) return q_ == Rational(1);
  return c_.size() == 1 && c_.front().is_one();
}

Elem Elem::operator-() const {
  Elem r(field_);
  if (field_->is_rational()) {
    r.q_ = -q_;
  } else {
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
  }
  return r;
}

Elem& Elem::operator+=(const Elem& o) {
  if (field_ != o.field_) {
    const FieldPtr f = common_field(field_, o.field_);
    *this = f->lift(*this);
    return *this += f->lift(o);
  }
  if (field_->is_rational()) {
    q_ += o.q_;
    return *this;
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_->base()->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  return *this;
}

Elem& Elem::operator-=(const Elem& o) { return *this += -o; }

Elem& Elem::operator*=(const Elem& o) {
  if (field_ != o.field_) {
    const FieldPtr f = common_field(field_, o.field_);
    *this = f->lift(*this);
    return *this *= f->lift(o);
  }
  if (field_->is_rational()) {
    q_ *= o.q_;
    return *this;
  }
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  const UniPoly prod = UniPoly(field_->base(), c_) * UniPoly(field_->base(), o.c_);
  *this = from_coeffs(field_, prod.coeffs());
  return *this;
}

Elem& Elem::operator/=(const Elem& o) { return *this *= o.inverse(); }

bool operator==(const Elem& a, const Elem& b) {
  if (a.field_ != b.field_) {
    const FieldPtr f = common_field(a.field_, b.field_);
    return f->lift(a) == f->lift(b);
  }
  if (a.field_->is_rational()) return a.q_ == b.q_;
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

Elem Elem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_->is_rational()) return Elem(field_, Rational(1) / q_);
  const ExtGcd eg = ext_gcd(UniPoly(field_->base(), c_), field_->modulus());
  if (eg.g.degree() != 0) throw std::domain_error("element is not invertible (modulus not irreducible)");
  return from_coeffs(field_, eg.s.coeffs());
}

Elem Elem::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  Elem result = field_->one();
  Elem base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::string Elem::to_string() const {
  if (field_->is_rational()) return q_.to_string();
  if (c_.empty()) return "0";
  return "(" + UniPoly(field_->base(), c_).to_string(field_->generator_name()) + ")";
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly() : field_(Field::rationals()) {}

UniPoly::UniPoly(FieldPtr field) : field_(std::move(field)) {}

UniPoly::UniPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (c.field() != field_) c = field_->lift(c);
  }
  trim();
}

UniPoly UniPoly::from_rationals(const std::vector<Rational>& coeffs) {
  const FieldPtr q = Field::rationals();
  std::vector<Elem> c;
  c.reserve(coeffs.size());
  for (const auto& r : coeffs) c.emplace_back(q, r);
  return UniPoly(q, std::move(c));
}

UniPoly UniPoly::constant(const Elem& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const Elem& c, int degree) {
  std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, c.field()->zero());
  v.back() = c;
  return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::variable(FieldPtr field) { return monomial(field->one(), 1); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Elem UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
  return c_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::operator-() const {
  UniPoly r(field_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (field_ != o.field_) {
    const FieldPtr f = common_field(field_, o.field_);
    *this = lifted(f);
    return *this += o.lifted(f);
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.field_ != b.field_) {
    const FieldPtr f = common_field(a.field_, b.field_);
    return a.lifted(f) * b.lifted(f);
  }
  UniPoly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

UniPoly UniPoly::scaled(const Elem& c) const {
  const FieldPtr f = common_field(field_, c.field());
  UniPoly r(f);
  r.c_.reserve(c_.size());
  for (const auto& x : c_) r.c_.push_back(f->lift(x) * c);
  r.trim();
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

UniPoly UniPoly::derivative() const {
  UniPoly r(field_);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r.c_.push_back(c_[i] * field_->from_rational(Rational(static_cast<long long>(i))));
  }
  r.trim();
  return r;
}

Elem UniPoly::eval(const Elem& x) const {
  Elem acc = common_field(field_, x.field())->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::shifted(const Elem& s) const {
  const FieldPtr f = common_field(field_, s.field());
  const UniPoly lin(f, {s, f->one()});
  UniPoly acc(f);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly::constant(f->lift(*it));
  return acc;
}

UniPoly UniPoly::lifted(const FieldPtr& target) const {
  if (target == field_) return *this;
  std::vector<Elem> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(target->lift(x));
  return UniPoly(target, std::move(c));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Elem& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = false;
    if (field_->is_rational() && c.rational().sign() < 0) {
      neg = true;
      cs = (-c).to_string();
    }
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    const bool unit = (cs == "1");
    if (i == 0) {
      os << cs;
    } else {
      if (!unit) os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const FieldPtr f = common_field(a.field(), b.field());
  UniPoly rem = a.lifted(f);
  const UniPoly d = b.lifted(f);
  const Elem inv = d.lead().inverse();
  std::vector<Elem> q(static_cast<std::size_t>(std::max(0, rem.degree() - d.degree() + 1)), f->zero());
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const int shift = rem.degree() - d.degree();
    const Elem factor = rem.lead() * inv;
    q[static_cast<std::size_t>(shift)] = factor;
    rem -= UniPoly::monomial(factor, shift) * d;
  }
  return {UniPoly(f, std::move(q)), rem};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  const FieldPtr f = common_field(a.field(), b.field());
  UniPoly x = a.lifted(f);
  UniPoly y = b.lifted(f);
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
  const FieldPtr f = common_field(a.field(), b.field());
  UniPoly r0 = a.lifted(f), r1 = b.lifted(f);
  UniPoly s0 = UniPoly::constant(f->one()), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(f->one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem inv = r0.lead().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace jumpnum
