#include "jumpnum/jumping.hpp"

#include <algorithm>
#include <numeric>

#include "jumpnum/errors.hpp"

namespace jumpnum {
namespace {

long long M(const ResolutionData& r, int i, int j) {
  return r.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

long long left_floor(const Rational& t) {
  const long long f = to_int64(t.floor());
  return t.is_integer() ? f - 1 : f;
}

}  // namespace

DivisorVector zero_vector(const ResolutionData& r) {
  return {std::vector<long long>(static_cast<std::size_t>(r.exceptional), 0), std::vector<long long>(static_cast<std::size_t>(r.strict), 0)};
}

bool dominated(const DivisorVector& a, const DivisorVector& b) {
  for (std::size_t i = 0; i < a.exceptional.size(); ++i) {
    if (a.exceptional[i] > b.exceptional[i]) return false;
  }
  for (std::size_t i = 0; i < a.strict.size(); ++i) {
    if (a.strict[i] > b.strict[i]) return false;
  }
  return true;
}

long long dot(const ResolutionData& r, const DivisorVector& d, int j) {
  long long s = 0;
  for (int i = 0; i < r.exceptional; ++i) s += d.exceptional[static_cast<std::size_t>(i)] * M(r, i, j);
  for (int b = 0; b < r.strict; ++b) s += d.strict[static_cast<std::size_t>(b)] * M(r, r.exceptional + b, j);
  return s;
}

std::string to_string(const DivisorVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.exceptional.size(); ++i) s += (i ? "," : "") + std::to_string(d.exceptional[i]);
  s += " | ";
  for (std::size_t i = 0; i < d.strict.size(); ++i) s += (i ? "," : "") + std::to_string(d.strict[i]);
  return s + ")";
}

std::vector<Rational> candidates(const ResolutionData& r, int j, const Rational& bound) {
  std::vector<Rational> out;
  const long long a = r.a[static_cast<std::size_t>(j)];
  const long long k = r.k[static_cast<std::size_t>(j)];
  for (long long n = 1;; ++n) {
    const Rational l(k + n, a);
    if (l > bound) break;
    out.push_back(l);
  }
  return out;
}

bool is_candidate(const ResolutionData& r, int j, const Rational& lambda) {
  const Rational t = lambda * Rational(r.a[static_cast<std::size_t>(j)]);
  return t.is_integer() && t >= Rational(r.k[static_cast<std::size_t>(j)] + 1);
}

DivisorVector round_down(const ResolutionData& r, const Rational& lambda) {
  DivisorVector d = zero_vector(r);
  for (int i = 0; i < r.exceptional; ++i) d.exceptional[static_cast<std::size_t>(i)] = floor_scale(lambda, r.a[static_cast<std::size_t>(i)]);
  for (int b = 0; b < r.strict; ++b) {
    d.strict[static_cast<std::size_t>(b)] = floor_scale(lambda, r.a[static_cast<std::size_t>(r.exceptional + b)]);
  }
  return d;
}

long long criterion_value(const ResolutionData& r, int j, const Rational& lambda) {
  return -dot(r, round_down(r, lambda), j);
}

bool contributes(const ResolutionData& r, int j, const Rational& lambda) {
  if (!is_candidate(r, j, lambda)) {
    throw InputError(lambda.to_string() + " is not a candidate jumping number for " + r.names[static_cast<std::size_t>(j)]);
  }
  return criterion_value(r, j, lambda) >= 2;
}

Relevance relevant(const ResolutionData& r, int j) {
  Relevance out;
  out.divisor = j;
  out.valence = r.valence[static_cast<std::size_t>(j)];
  out.relevant = out.valence >= 3;
  if (out.relevant) out.witness = Rational(1) - Rational(1, r.a[static_cast<std::size_t>(j)]);
  return out;
}

std::vector<Relevance> relevance_table(const ResolutionData& r) {
  std::vector<Relevance> out;
  for (int j = 0; j < r.exceptional; ++j) out.push_back(relevant(r, j));
  return out;
}

std::vector<std::string> check_relevance_theorem(const ResolutionData& r) {
  std::vector<std::string> out;
  for (int j = 0; j < r.exceptional; ++j) {
    const auto rel = relevant(r, j);
    bool any = false;
    for (const auto& l : candidates(r, j, Rational(1))) any = any || contributes(r, j, l);
    const std::string name = r.names[static_cast<std::size_t>(j)];
    if (any != rel.relevant) {
      out.push_back(name + ": valence " + std::to_string(rel.valence) + " but " + (any ? "contributes" : "contributes nothing"));
    }
    if (rel.relevant && (!is_candidate(r, j, *rel.witness) || !contributes(r, j, *rel.witness))) {
      out.push_back(name + ": witness " + rel.witness->to_string() + " does not pass the criterion");
    }
  }
  return out;
}

DivisorVector antinef_closure(const ResolutionData& r, DivisorVector d, std::mt19937_64* rng) {
  const int n = r.exceptional;
  std::vector<long long> dots(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    dots[static_cast<std::size_t>(j)] = dot(r, d, j);
    for (int i = 0; i < n; ++i) {
      if (i != j && M(r, i, j) != 0) neighbours[static_cast<std::size_t>(j)].push_back(i);
    }
  }
  std::vector<int> positive;
  while (true) {
    positive.clear();
    for (int j = 0; j < n; ++j) {
      if (dots[static_cast<std::size_t>(j)] > 0) positive.push_back(j);
    }
    if (positive.empty()) return d;
    int j = positive.front();
    if (rng != nullptr) {
      std::uniform_int_distribution<std::size_t> pick(0, positive.size() - 1);
      j = positive[pick(*rng)];
    }
    const long long self = -r.self_intersection(j);
    const long long step = (dots[static_cast<std::size_t>(j)] + self - 1) / self;
    d.exceptional[static_cast<std::size_t>(j)] += step;
    dots[static_cast<std::size_t>(j)] -= step * self;
    for (int i : neighbours[static_cast<std::size_t>(j)]) dots[static_cast<std::size_t>(i)] += step * M(r, i, j);
  }
}

DivisorVector multiplier_vector(const ResolutionData& r, const Rational& lambda, Side side) {
  DivisorVector d = zero_vector(r);
  auto F = [&](long long a) {
    const Rational t = lambda * Rational(a);
    return side == Side::at ? to_int64(t.floor()) : left_floor(t);
  };
  for (int i = 0; i < r.exceptional; ++i) {
    d.exceptional[static_cast<std::size_t>(i)] = std::max(0LL, F(r.a[static_cast<std::size_t>(i)]) - r.k[static_cast<std::size_t>(i)]);
  }
  for (int b = 0; b < r.strict; ++b) d.strict[static_cast<std::size_t>(b)] = F(r.a[static_cast<std::size_t>(r.exceptional + b)]);
  return d;
}

namespace {

/// Multiplier vector at p/q (or just left of it), in machine integers.
DivisorVector multiplier_vector(const ResolutionData& r, long long p, long long q, Side side) {
  DivisorVector d = zero_vector(r);
  auto F = [&](long long a) {
    const long long num = p * a;
    const long long f = num / q;
    return side == Side::left_limit && num % q == 0 ? f - 1 : f;
  };
  for (int i = 0; i < r.exceptional; ++i) {
    d.exceptional[static_cast<std::size_t>(i)] = std::max(0LL, F(r.a[static_cast<std::size_t>(i)]) - r.k[static_cast<std::size_t>(i)]);
  }
  for (int b = 0; b < r.strict; ++b) d.strict[static_cast<std::size_t>(b)] = F(r.a[static_cast<std::size_t>(r.exceptional + b)]);
  return d;
}

bool is_jumping(const ResolutionData& r, long long p, long long q) {
  const auto at = multiplier_vector(r, p, q, Side::at);
  const auto before = multiplier_vector(r, p, q, Side::left_limit);
  if (at.strict != before.strict) return true;
  if (at == before) return false;
  return antinef_closure(r, at) != antinef_closure(r, before);
}

}  // namespace

bool is_jumping(const ResolutionData& r, const Rational& lambda) {
  if (lambda <= Rational(0)) return false;
  return is_jumping(r, to_int64(lambda.numerator()), to_int64(lambda.denominator()));
}

namespace {

JumpRecord make_record(const ResolutionData& r, const Rational& lambda) {
  JumpRecord rec;
  rec.lambda = lambda;
  for (int i = 0; i < r.size(); ++i) {
    if ((lambda * Rational(r.a[static_cast<std::size_t>(i)])).is_integer()) rec.critical.push_back(i);
  }
  for (int j : rec.critical) {
    if (j < r.exceptional && is_candidate(r, j, lambda) && contributes(r, j, lambda)) rec.contributing.push_back(j);
  }
  return rec;
}

}  // namespace

JumpReport jumping_numbers(const ResolutionData& r, const Rational& bound) {
  if (bound <= Rational(0)) throw InputError("bound must be positive");
  std::vector<std::pair<long long, long long>> grid;
  for (int i = 0; i < r.size(); ++i) {
    const long long a = r.a[static_cast<std::size_t>(i)];
    for (long long t = 1; Rational(t, a) <= bound; ++t) {
      const long long g = std::gcd(t, a);
      grid.emplace_back(t / g, a / g);
    }
  }
  std::sort(grid.begin(), grid.end(), [](const auto& x, const auto& y) { return x.first * y.second < y.first * x.second; });
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  JumpReport rep;
  rep.bound = bound;
  for (const auto& [p, q] : grid) {
    if (is_jumping(r, p, q)) rep.records.push_back(make_record(r, Rational(p, q)));
  }
  if (rep.records.empty()) throw InvariantError("no jumping number found up to " + bound.to_string());
  rep.lct = rep.records.front().lambda;
  rep.relevance = relevance_table(r);
  return rep;
}

JumpRecord contribution_report(const ResolutionData& r, const Rational& lambda) {
  if (lambda <= Rational(0) || !is_jumping(r, lambda)) throw InputError(lambda.to_string() + " is not a jumping number");
  return make_record(r, lambda);
}

bool skoda_shift(const JumpReport& report, const Rational& lambda) {
  if (lambda <= Rational(1)) throw InputError("skoda_shift needs lambda > 1");
  const Rational prev = lambda - Rational(1);
  if (prev > report.bound) throw InputError(prev.to_string() + " lies outside the report");
  if (lambda.is_integer()) return true;
  return std::any_of(report.records.begin(), report.records.end(), [&](const JumpRecord& rec) { return rec.lambda == prev; });
}

}  // namespace jumpnum
