#include "jumpnum/puiseux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "bivariate.hpp"
#include "jumpnum/errors.hpp"
#include "jumpnum/factor.hpp"

namespace jumpnum {
namespace detail {

using EPoly = std::map<Monomial, Elem>;

/// X = xi^v X'^q and Y = X'^m (xi^u + Y'), with u*q - v*m = 1.
struct Step {
  long long m = 0;
  long long q = 1;
  long long u = 0;
  long long v = 0;
  Elem xi;
};

struct Expansion {
  long long shear = 0;
  std::vector<Step> steps;
  bool exact = false;  // the last chart's branch is Y = 0
  EPoly leaf;
  FieldPtr field;
};

}  // namespace detail

namespace {

using detail::EPoly;
using detail::Step;

struct Node {
  int parent = -1;
  FieldPtr field;
  std::vector<std::pair<int, EPoly>> polys;  // (squarefree factor, chart polynomial)
  std::optional<Step> step;
  bool exact = false;
  int ext_degree = 1;
  Rational gamma;  // x-exponent of the term fixed by this node
  long long Q = 1;
  std::vector<int> children;
};

int y_order(const EPoly& g) {
  int r = -1;
  for (const auto& [mono, c] : g) {
    if (mono.first == 0 && (r < 0 || mono.second < r)) r = mono.second;
  }
  return r;
}

bool divisible_by_y(const EPoly& g) {
  return std::all_of(g.begin(), g.end(), [](const auto& t) { return t.first.second > 0; });
}

/// (m, q) slopes of the compact edges between (0, r) and the lowest row.
std::vector<std::pair<long long, long long>> slopes(const EPoly& g, int r) {
  std::map<int, int> lowest;  // a -> min b
  for (const auto& [mono, c] : g) {
    if (mono.second > r) continue;
    auto it = lowest.find(mono.first);
    if (it == lowest.end() || mono.second < it->second) lowest[mono.first] = mono.second;
  }
  std::vector<Monomial> hull;
  for (const auto& [a, b] : lowest) {
    if (!hull.empty() && b >= hull.back().second) continue;
    const Monomial pt{a, b};
    while (hull.size() >= 2) {
      const auto& p = hull[hull.size() - 2];
      const auto& q = hull.back();
      const long long cr = static_cast<long long>(q.first - p.first) * (pt.second - p.second) -
                           static_cast<long long>(q.second - p.second) * (pt.first - p.first);
      if (cr > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<std::pair<long long, long long>> out;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const long long da = hull[k + 1].first - hull[k].first, db = hull[k].second - hull[k + 1].second;
    const long long g0 = std::gcd(da, db);
    out.emplace_back(da / g0, db / g0);
  }
  return out;
}

long long weight(const Monomial& mono, long long m, long long q) { return q * mono.first + m * mono.second; }

long long min_weight(const EPoly& g, long long m, long long q) {
  long long best = -1;
  for (const auto& [mono, c] : g) {
    const long long w = weight(mono, m, q);
    if (best < 0 || w < best) best = w;
  }
  return best;
}

/// Edge polynomial in w = (leading coefficient)^q.
UniPoly edge_polynomial(const EPoly& g, long long m, long long q, const FieldPtr& field) {
  const long long L = min_weight(g, m, q);
  int b_low = -1;
  for (const auto& [mono, c] : g) {
    if (weight(mono, m, q) == L && (b_low < 0 || mono.second < b_low)) b_low = mono.second;
  }
  std::vector<Elem> coeffs;
  for (const auto& [mono, c] : g) {
    if (weight(mono, m, q) != L) continue;
    const auto k = static_cast<std::size_t>((mono.second - b_low) / q);
    if (coeffs.size() <= k) coeffs.resize(k + 1, field->zero());
    coeffs[k] += field->lift(c);
  }
  return UniPoly(field, coeffs);
}

EPoly substitute(const EPoly& g, const Step& s, const FieldPtr& field) {
  const long long L = min_weight(g, s.m, s.q);
  const Elem xu = field->lift(s.xi).pow(s.u);
  const Elem xv = field->lift(s.xi).pow(s.v);
  EPoly out;
  auto add = [&](const Monomial& mono, const Elem& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.emplace(mono, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  };
  for (const auto& [mono, c] : g) {
    const int a = static_cast<int>(weight(mono, s.m, s.q) - L);
    const Elem base = field->lift(c) * xv.pow(mono.first);
    const int b = mono.second;
    Integer binom = 1;
    for (int k = 0; k <= b; ++k) {
      add({a, k}, base * Elem(field, Rational(binom)) * xu.pow(b - k));
      binom = binom * (b - k) / (k + 1);
    }
  }
  return out;
}

/// u, v with u*q - v*m = 1.
std::pair<long long, long long> bezout(long long q, long long m) {
  long long r0 = q, r1 = m, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long k = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
  }
  return {s0, -t0};
}

EPoly to_epoly(const Poly2& f) {
  EPoly out;
  for (const auto& [mono, c] : f.terms()) out.emplace(mono, Elem(Field::rationals(), c));
  return out;
}

Poly2 sheared(const Poly2& f, long long c) {
  if (c == 0) return f;
  const Poly2 x = Poly2::x() + Poly2::monomial(Rational(c), 0, 1);
  Poly2 out;
  for (const auto& [mono, coef] : f.terms()) out += Poly2(coef) * x.pow(mono.first) * Poly2::y().pow(mono.second);
  return out;
}

class Tree {
 public:
  Tree(int max_depth) : max_depth_(max_depth) {}

  std::vector<Node> nodes;

  void grow(int id) {
    if (nodes[static_cast<std::size_t>(id)].exact) return;
    int total = 0;
    for (const auto& [i, g] : nodes[static_cast<std::size_t>(id)].polys) total += y_order(g);
    if (total <= 1) return;
    const Node node = nodes[static_cast<std::size_t>(id)];
    for (const auto& [i, g] : node.polys) {
      if (!divisible_by_y(g)) continue;
      Node e;
      e.parent = id;
      e.field = node.field;
      e.polys = {{i, g}};
      e.exact = true;
      e.Q = node.Q;
      add_child(id, std::move(e));
    }
    std::vector<std::pair<long long, long long>> all;
    for (const auto& [i, g] : node.polys) {
      for (const auto& s : slopes(g, y_order(g))) all.push_back(s);
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first * b.second < b.first * a.second; });
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const auto& [m, q] : all) {
      UniPoly phi = UniPoly::constant(node.field->one());
      for (const auto& [i, g] : node.polys) phi = phi * edge_polynomial(g, m, q, node.field);
      for (const auto& [factor_poly, mult] : factor(phi)) {
        if (factor_poly.degree() < 1) continue;
        Node c;
        c.parent = id;
        Step s;
        s.m = m;
        s.q = q;
        std::tie(s.u, s.v) = bezout(q, m);
        if (factor_poly.degree() == 1) {
          c.field = node.field;
          s.xi = -factor_poly.coeff(0);
        } else {
          c.field = Field::extend_unchecked(factor_poly);
          if (c.field->depth() > max_depth_) {
            throw ExtensionDepthError("a branch needs a root of " + factor_poly.to_string("w") + " over a tower of depth " +
                                      std::to_string(node.field->depth()) + ", beyond the limit " + std::to_string(max_depth_) +
                                      "; give the branches or the diagram explicitly");
          }
          s.xi = c.field->generator();
          c.ext_degree = factor_poly.degree();
        }
        c.gamma = node.gamma + Rational(m, node.Q * q);
        c.Q = node.Q * q;
        for (const auto& [i, g] : node.polys) {
          EPoly h = substitute(g, s, c.field);
          if (y_order(h) > 0) c.polys.emplace_back(i, std::move(h));
        }
        c.step = s;
        if (c.polys.empty()) throw InvariantError("edge factor " + factor_poly.to_string("w") + " produced no branch");
        add_child(id, std::move(c));
      }
    }
  }

 private:
  void add_child(int parent, Node c) {
    const int id = static_cast<int>(nodes.size());
    nodes.push_back(std::move(c));
    nodes[static_cast<std::size_t>(parent)].children.push_back(id);
    grow(id);
  }

  int max_depth_;
};

struct CBranch {
  int leaf = 0;
  std::map<int, int> choice;  // extension node -> chosen conjugate
};

std::vector<int> path_to(const std::vector<Node>& nodes, int leaf) {
  std::vector<int> p;
  for (int v = leaf; v > 0; v = nodes[static_cast<std::size_t>(v)].parent) p.push_back(v);
  std::reverse(p.begin(), p.end());
  return p;
}

/// x-order of coincidence of the closest conjugates of two distinct branches.
Rational contact_order(const std::vector<Node>& nodes, const CBranch& A, const CBranch& B) {
  const auto pa = path_to(nodes, A.leaf), pb = path_to(nodes, B.leaf);
  for (std::size_t t = 0; t < std::min(pa.size(), pb.size()); ++t) {
    const Node& na = nodes[static_cast<std::size_t>(pa[t])];
    const Node& nb = nodes[static_cast<std::size_t>(pb[t])];
    if (pa[t] != pb[t]) {
      if (na.exact) return nb.gamma;
      if (nb.exact) return na.gamma;
      return std::min(na.gamma, nb.gamma);
    }
    if (na.ext_degree > 1 && A.choice.at(pa[t]) != B.choice.at(pa[t])) return na.gamma;
  }
  throw InvariantError("two branches with identical expansions");
}

Rational half_intersection(const CharExponents& a, const CharExponents& b, const Rational& kappa) {
  Rational s = kappa;
  const auto e = b.e();
  for (int q = 1; q <= b.g(); ++q) {
    const Rational bq(b.beta()[static_cast<std::size_t>(q)], b.multiplicity());
    s += Rational(e[static_cast<std::size_t>(q - 1)] - e[static_cast<std::size_t>(q)]) * std::min(kappa, bq);
  }
  return Rational(a.multiplicity()) * s;
}

std::vector<Elem> series_mul(const std::vector<Elem>& a, const std::vector<Elem>& b, const FieldPtr& field, std::size_t n) {
  std::vector<Elem> r(n, field->zero());
  for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

std::vector<Elem> series_inverse(const std::vector<Elem>& a, const FieldPtr& field, std::size_t n) {
  if (a.empty() || a[0].is_zero()) throw InvariantError("series without constant term is not invertible");
  std::vector<Elem> r(n, field->zero());
  const Elem inv = a[0].inverse();
  r[0] = inv;
  for (std::size_t k = 1; k < n; ++k) {
    Elem s = field->zero();
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * r[k - i];
    r[k] = -(s * inv);
  }
  return r;
}

std::vector<Elem> series_pow(const std::vector<Elem>& a, long long k, const FieldPtr& field, std::size_t n) {
  std::vector<Elem> r(n, field->zero());
  r[0] = field->one();
  for (long long i = 0; i < k; ++i) r = series_mul(r, a, field, n);
  return r;
}

}  // namespace

long long shear_constant(const Poly2& f) {
  if (f.is_zero()) throw InputError("the zero polynomial defines no germ");
  const int d = f.order();
  Poly2 lowest;
  for (const auto& [mono, c] : f.terms()) {
    if (mono.first + mono.second == d) lowest += Poly2::monomial(c, mono.first, mono.second);
  }
  for (long long k = 0;; ++k) {
    for (long long c : {k, -k}) {
      Rational v(0);
      for (const auto& [mono, coef] : lowest.terms()) {
        Rational p(1);
        for (int i = 0; i < mono.first; ++i) p *= Rational(c);
        v += coef * p;
      }
      if (!v.is_zero()) return c;
      if (k == 0) break;
    }
  }
}

std::vector<BranchResult> puiseux_branches(const Poly2& f, int max_depth) {
  if (f.is_zero()) throw InputError("the zero polynomial defines no germ");
  if (!f.coeff(0, 0).is_zero()) throw InputError("f does not vanish at the origin");
  if (max_depth < 0) throw InputError("extension depth must be nonnegative");
  const long long c = shear_constant(f);
  const auto parts = detail::squarefree_decomposition(sheared(f, c));

  Tree tree(max_depth);
  Node root;
  root.field = Field::rationals();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    EPoly g = to_epoly(parts[i].first);
    if (y_order(g) > 0) root.polys.emplace_back(static_cast<int>(i), std::move(g));
  }
  if (root.polys.empty()) throw InvariantError("no branch through the origin");
  tree.nodes.push_back(root);
  tree.grow(0);
  const auto& nodes = tree.nodes;

  // Leaves in tree order, each with its conjugates.
  std::vector<CBranch> cb;
  std::vector<int> leaves;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const auto& ch = nodes[static_cast<std::size_t>(v)].children;
    if (ch.empty()) leaves.push_back(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }

  std::vector<BranchResult> out;
  std::vector<CharExponents> exps;
  for (std::size_t cls = 0; cls < leaves.size(); ++cls) {
    const int leaf = leaves[cls];
    const auto path = path_to(nodes, leaf);
    const Node& L = nodes[static_cast<std::size_t>(leaf)];
    std::vector<long long> beta{L.Q};
    std::vector<int> ext;
    auto expansion = std::make_shared<detail::Expansion>();
    expansion->shear = c;
    expansion->field = L.field;
    expansion->exact = L.exact;
    expansion->leaf = L.polys.front().second;
    for (int v : path) {
      const Node& n = nodes[static_cast<std::size_t>(v)];
      if (n.exact) continue;
      expansion->steps.push_back(*n.step);
      if (n.step->q > 1) {
        const Rational b = n.gamma * Rational(L.Q);
        if (!b.is_integer()) throw InvariantError("characteristic exponent is not an integer");
        beta.push_back(to_int64(b.numerator()));
      }
      if (n.ext_degree > 1) ext.push_back(v);
    }
    CharExponents ce;
    try {
      ce = CharExponents(beta);
    } catch (const InputError& e) {
      throw InvariantError(std::string("expansion produced invalid exponents: ") + e.what());
    }
    std::vector<int> digits(ext.size(), 0);
    std::vector<std::size_t> members;
    while (true) {
      CBranch b;
      b.leaf = leaf;
      for (std::size_t k = 0; k < ext.size(); ++k) b.choice[ext[k]] = digits[k];
      members.push_back(out.size());
      cb.push_back(b);
      BranchResult r;
      r.exponents = ce;
      r.coefficient = parts[static_cast<std::size_t>(L.polys.front().first)].second;
      r.conjugacy_class = static_cast<int>(cls);
      r.expansion = expansion;
      out.push_back(r);
      exps.push_back(ce);
      std::size_t k = 0;
      while (k < ext.size()) {
        if (++digits[k] < nodes[static_cast<std::size_t>(ext[k])].ext_degree) break;
        digits[k] = 0;
        ++k;
      }
      if (k == ext.size()) break;
    }
    for (std::size_t m : members) out[m].class_size = static_cast<int>(members.size());
  }

  const std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) {
    out[i].name = "B" + std::to_string(i + 1);
    out[i].shared.assign(n, 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational kappa = contact_order(nodes, cb[i], cb[j]);
      const Rational I = half_intersection(exps[i], exps[j], kappa);
      if (I != half_intersection(exps[j], exps[i], kappa) || !I.is_integer()) {
        throw InvariantError("asymmetric intersection number between " + out[i].name + " and " + out[j].name);
      }
      const long long target = to_int64(I.numerator());
      int shared = 0;
      for (int s = 1; s <= target; ++s) {
        long long v = 0;
        try {
          v = branch_intersection(exps[i], exps[j], s);
        } catch (const InputError&) {
          break;
        }
        if (v == target) {
          shared = s;
          break;
        }
        if (v > target) break;
      }
      if (shared == 0) {
        throw InvariantError("no shared point count matches intersection " + std::to_string(target) + " of " + out[i].name + " and " + out[j].name);
      }
      out[i].shared[j] = out[j].shared[i] = shared;
    }
  }
  return out;
}

EnriquesDiagram to_diagram(const std::vector<BranchResult>& branches) {
  std::vector<BranchSpec> specs;
  std::vector<Contact> contacts;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    specs.push_back({branches[i].name, branches[i].exponents, branches[i].coefficient});
    for (std::size_t j = i + 1; j < branches.size(); ++j) {
      contacts.push_back({static_cast<int>(i), static_cast<int>(j), branches[i].shared.at(j)});
    }
  }
  return build_diagram(specs, contacts);
}

Parametrization parametrize(const BranchResult& b, int terms) {
  const auto& e = *b.expansion;
  const FieldPtr F = e.field;
  const auto n = static_cast<std::size_t>(std::max(terms, 1));
  std::vector<Elem> X(n, F->zero()), Y(n, F->zero());
  if (n > 1) X[1] = F->one();
  if (!e.exact) {
    // Newton iteration on G(t, Y) = 0; dG/dY is a unit at the origin.
    std::vector<std::vector<Elem>> C, D;
    for (const auto& [mono, coef] : e.leaf) {
      if (static_cast<std::size_t>(mono.first) >= n) continue;
      const auto b = static_cast<std::size_t>(mono.second);
      if (C.size() <= b) {
        C.resize(b + 1, std::vector<Elem>(n, F->zero()));
        D.resize(b + 1, std::vector<Elem>(n, F->zero()));
      }
      C[b][static_cast<std::size_t>(mono.first)] += F->lift(coef);
      if (b > 0) D[b - 1][static_cast<std::size_t>(mono.first)] += F->lift(coef) * Elem(F, Rational(static_cast<long long>(b)));
    }
    auto horner = [&](const std::vector<std::vector<Elem>>& P) {
      std::vector<Elem> acc(n, F->zero());
      for (std::size_t b = P.size(); b-- > 0;) {
        acc = series_mul(acc, Y, F, n);
        for (std::size_t k = 0; k < n; ++k) acc[k] += P[b][k];
      }
      return acc;
    };
    for (std::size_t prec = 1;; prec *= 2) {
      const auto g = horner(C);
      const auto dg = horner(D);
      const auto step = series_mul(g, series_inverse(dg, F, n), F, n);
      for (std::size_t k = 0; k < n; ++k) Y[k] -= step[k];
      if (prec >= 2 * n) break;
    }
  }
  for (auto it = e.steps.rbegin(); it != e.steps.rend(); ++it) {
    const Elem xi = F->lift(it->xi);
    std::vector<Elem> shifted = Y;
    shifted[0] += xi.pow(it->u);
    Y = series_mul(series_pow(X, it->m, F, n), shifted, F, n);
    X = series_pow(X, it->q, F, n);
    const Elem cv = xi.pow(it->v);
    for (auto& v : X) v *= cv;
  }
  for (std::size_t k = 0; k < n; ++k) X[k] += Elem(F, Rational(e.shear)) * Y[k];
  return {F, X, Y};
}

}  // namespace jumpnum
