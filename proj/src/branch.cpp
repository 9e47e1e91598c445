#include "jumpnum/branch.hpp"

#include <numeric>

#include "jumpnum/errors.hpp"

namespace jumpnum {

CharExponents::CharExponents(std::vector<long long> beta) : beta_(std::move(beta)) {
  if (beta_.empty()) throw InputError("characteristic exponents: empty list");
  if (beta_.front() < 1) throw InputError("characteristic exponents: multiplicity must be positive");
  for (std::size_t i = 1; i < beta_.size(); ++i) {
    if (beta_[i] <= beta_[i - 1]) throw InputError("characteristic exponents must be strictly increasing: " + to_string());
  }
  long long e = beta_.front();
  for (std::size_t i = 1; i < beta_.size(); ++i) {
    const long long next = std::gcd(e, beta_[i]);
    if (next == e) throw InputError("characteristic exponents: gcd does not drop at " + std::to_string(beta_[i]) + " in " + to_string());
    e = next;
  }
  if (e != 1) throw InputError("characteristic exponents: gcd of all exponents must be 1 in " + to_string());
}

std::vector<long long> CharExponents::e() const {
  std::vector<long long> out{beta_.front()};
  for (std::size_t i = 1; i < beta_.size(); ++i) out.push_back(std::gcd(out.back(), beta_[i]));
  return out;
}

std::string CharExponents::to_string() const {
  std::string s = "(" + std::to_string(beta_.front()) + ";";
  for (std::size_t i = 1; i < beta_.size(); ++i) s += (i > 1 ? "," : "") + std::to_string(beta_[i]);
  return s + ")";
}

MultiplicitySeq sequence_from_multiplicities(const std::vector<long long>& m) {
  MultiplicitySeq seq(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1) throw InvariantError("multiplicity sequence: non-positive entry");
    seq[i].multiplicity = m[i];
  }
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    long long sum = 0;
    std::size_t j = i + 1;
    for (; j < m.size() && sum < m[i]; ++j) {
      sum += m[j];
      if (j > i + 1) {
        seq[j].kind = PointKind::satellite;
        if (seq[j].extra != -1) throw InvariantError("multiplicity sequence: point proximate to three others");
        seq[j].extra = static_cast<int>(i);
      }
    }
    if (sum > m[i]) throw InvariantError("multiplicity sequence: proximity equality fails");
  }
  return seq;
}

MultiplicitySeq multiplicity_sequence(const CharExponents& c) {
  std::vector<long long> m;
  const auto& beta = c.beta();
  const auto e = c.e();
  if (c.g() == 0) return sequence_from_multiplicities({1});
  for (int q = 1; q <= c.g(); ++q) {
    long long a = q == 1 ? beta[1] : beta[q] - beta[q - 1];
    long long b = e[q - 1];
    while (b != 0) {
      const long long h = a / b;
      for (long long i = 0; i < h; ++i) m.push_back(b);
      a -= h * b;
      std::swap(a, b);
    }
  }
  return sequence_from_multiplicities(m);
}

MultiplicitySeq extended_sequence(const CharExponents& c, int length) {
  std::vector<long long> m;
  for (const auto& s : multiplicity_sequence(c)) m.push_back(s.multiplicity);
  while (static_cast<int>(m.size()) < length) m.push_back(1);
  return sequence_from_multiplicities(m);
}

std::vector<long long> semigroup(const CharExponents& c) {
  const auto& beta = c.beta();
  const auto e = c.e();
  std::vector<long long> gens{beta[0]};
  if (c.g() >= 1) gens.push_back(beta[1]);
  for (int q = 1; q < c.g(); ++q) {
    const long long n = e[q - 1] / e[q];
    gens.push_back(n * gens.back() + beta[q + 1] - beta[q]);
  }
  return gens;
}

long long branch_intersection(const CharExponents& a, const CharExponents& b, int shared) {
  if (shared < 1) throw InputError("branch_intersection: shared point count must be at least 1");
  const auto sa = extended_sequence(a, shared);
  const auto sb = extended_sequence(b, shared);
  long long sum = 0;
  for (int i = 0; i < shared; ++i) {
    const auto& x = sa[static_cast<std::size_t>(i)];
    const auto& y = sb[static_cast<std::size_t>(i)];
    if (x.kind != y.kind || x.extra != y.extra) {
      throw InputError("branch_intersection: branches " + a.to_string() + " and " + b.to_string() + " cannot share " +
                       std::to_string(shared) + " points");
    }
    sum += x.multiplicity * y.multiplicity;
  }
  return sum;
}

int satellite_runs(const MultiplicitySeq& s) {
  int count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].kind == PointKind::satellite && (i + 1 == s.size() || s[i + 1].kind == PointKind::free_point)) ++count;
  }
  return count;
}

}  // namespace jumpnum
