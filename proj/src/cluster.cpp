#include "jumpnum/cluster.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>

#include "jumpnum/errors.hpp"

namespace jumpnum {

std::vector<int> Point::proximities() const {
  std::vector<int> out;
  if (parent >= 0) out.push_back(parent);
  if (extra >= 0) out.push_back(extra);
  return out;
}

std::vector<long long> EnriquesDiagram::total_multiplicities() const {
  std::vector<long long> m(points.size(), 0);
  for (const auto& b : branches) {
    for (std::size_t k = 0; k < b.path.size() && k < b.multiplicities.size(); ++k) {
      const int p = b.path[k];
      if (p >= 0 && p < static_cast<int>(points.size())) m[static_cast<std::size_t>(p)] += b.coefficient * b.multiplicities[k];
    }
  }
  return m;
}

std::vector<std::vector<int>> EnriquesDiagram::proximate_points() const {
  std::vector<std::vector<int>> out(points.size());
  for (const auto& q : points) {
    for (int p : q.proximities()) {
      if (p >= 0 && p < static_cast<int>(points.size())) out[static_cast<std::size_t>(p)].push_back(q.id);
    }
  }
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

std::vector<std::vector<int>> EnriquesDiagram::children() const {
  std::vector<std::vector<int>> out(points.size());
  for (const auto& q : points) {
    if (q.parent >= 0 && q.parent < static_cast<int>(points.size())) out[static_cast<std::size_t>(q.parent)].push_back(q.id);
  }
  return out;
}

EnriquesDiagram build_diagram(const std::vector<BranchSpec>& branches, const std::vector<Contact>& contacts) {
  const int n = static_cast<int>(branches.size());
  if (n == 0) throw InputError("no branches given");
  for (const auto& b : branches) {
    if (b.coefficient < 1) throw InputError("branch " + b.name + ": coefficient must be positive");
  }
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 1));
  std::set<std::pair<int, int>> seen;
  for (const auto& ct : contacts) {
    if (ct.a < 0 || ct.b < 0 || ct.a >= n || ct.b >= n || ct.a == ct.b) throw InputError("contact refers to an invalid branch pair");
    if (ct.shared < 1) throw InputError("contact between " + branches[static_cast<std::size_t>(ct.a)].name + " and " +
                                        branches[static_cast<std::size_t>(ct.b)].name + ": shared points must be at least 1");
    const auto key = std::minmax(ct.a, ct.b);
    if (!seen.insert(key).second && c[static_cast<std::size_t>(ct.a)][static_cast<std::size_t>(ct.b)] != ct.shared) {
      throw InputError("conflicting contacts for " + branches[static_cast<std::size_t>(ct.a)].name + " and " +
                       branches[static_cast<std::size_t>(ct.b)].name);
    }
    c[static_cast<std::size_t>(ct.a)][static_cast<std::size_t>(ct.b)] = ct.shared;
    c[static_cast<std::size_t>(ct.b)][static_cast<std::size_t>(ct.a)] = ct.shared;
  }
  auto C = [&](int i, int j) { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  const auto name = [&](int i) { return branches[static_cast<std::size_t>(i)].name; };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        std::array<int, 3> v{C(i, j), C(i, k), C(j, k)};
        std::sort(v.begin(), v.end());
        if (v[0] != v[1]) {
          throw InputError("contacts of " + name(i) + ", " + name(j) + ", " + name(k) +
                           " are not consistent with a tree: the two smallest shared counts differ");
        }
      }
    }
  }

  std::vector<MultiplicitySeq> seq;
  for (int i = 0; i < n; ++i) {
    int len = static_cast<int>(multiplicity_sequence(branches[static_cast<std::size_t>(i)].exponents).size());
    for (int j = 0; j < n; ++j) {
      if (j != i) len = std::max(len, C(i, j));
    }
    seq.push_back(extended_sequence(branches[static_cast<std::size_t>(i)].exponents, len));
  }
  auto S = [&](int i) -> const MultiplicitySeq& { return seq[static_cast<std::size_t>(i)]; };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int shared = C(i, j);
      for (int t = 0; t < shared; ++t) {
        const auto& x = S(i)[static_cast<std::size_t>(t)];
        const auto& y = S(j)[static_cast<std::size_t>(t)];
        if (x.kind != y.kind || x.extra != y.extra) {
          throw InputError("branches " + name(i) + " and " + name(j) + " cannot share " + std::to_string(shared) +
                           " points: their proximity structures differ at point " + std::to_string(t));
        }
      }
      const auto t = static_cast<std::size_t>(shared);
      if (t < S(i).size() && t < S(j).size() && S(i)[t].kind == PointKind::satellite && S(j)[t].kind == PointKind::satellite &&
          S(i)[t].extra == S(j)[t].extra) {
        throw InputError("branches " + name(i) + " and " + name(j) + " both continue through the same satellite point after " +
                         std::to_string(shared) + " shared points");
      }
    }
  }

  // Temporary point ids, then level-by-level renumbering.
  struct Temp {
    int level;
    int first_branch;
  };
  std::vector<Temp> temps;
  std::vector<std::vector<int>> tid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < static_cast<int>(S(i).size()); ++t) {
      int id = -1;
      for (int j = 0; j < i && id < 0; ++j) {
        if (C(i, j) > t) id = tid[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
      }
      if (id < 0) {
        id = static_cast<int>(temps.size());
        temps.push_back({t, i});
      }
      tid[static_cast<std::size_t>(i)].push_back(id);
    }
  }
  std::vector<int> order(temps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(temps[static_cast<std::size_t>(a)].level, temps[static_cast<std::size_t>(a)].first_branch) <
           std::tie(temps[static_cast<std::size_t>(b)].level, temps[static_cast<std::size_t>(b)].first_branch);
  });
  std::vector<int> renum(temps.size());
  for (std::size_t k = 0; k < order.size(); ++k) renum[static_cast<std::size_t>(order[k])] = static_cast<int>(k);

  EnriquesDiagram d;
  d.points.resize(temps.size());
  for (std::size_t k = 0; k < d.points.size(); ++k) d.points[k].id = static_cast<int>(k);
  for (int i = 0; i < n; ++i) {
    const auto& ids = tid[static_cast<std::size_t>(i)];
    DiagramBranch b;
    b.name = name(i);
    b.exponents = branches[static_cast<std::size_t>(i)].exponents;
    b.coefficient = branches[static_cast<std::size_t>(i)].coefficient;
    for (std::size_t t = 0; t < ids.size(); ++t) {
      const int p = renum[static_cast<std::size_t>(ids[t])];
      auto& pt = d.points[static_cast<std::size_t>(p)];
      pt.parent = t == 0 ? -1 : renum[static_cast<std::size_t>(ids[t - 1])];
      const int extra = S(i)[t].extra;
      pt.extra = extra < 0 ? -1 : renum[static_cast<std::size_t>(ids[static_cast<std::size_t>(extra)])];
      b.path.push_back(p);
      b.multiplicities.push_back(S(i)[t].multiplicity);
    }
    d.branches.push_back(std::move(b));
  }

  const auto problems = validate(d);
  if (!problems.empty()) throw InvariantError("built diagram fails validation: " + problems.front());
  return d;
}

std::vector<std::string> validate(const EnriquesDiagram& d) {
  std::vector<std::string> out;
  const int n = static_cast<int>(d.points.size());
  const auto P = [](int p) { return "p" + std::to_string(p); };

  // Tree shape.
  bool tree_ok = true;
  for (int i = 0; i < n; ++i) {
    const auto& pt = d.points[static_cast<std::size_t>(i)];
    if (pt.id != i) {
      out.push_back("tree shape: point at position " + std::to_string(i) + " has id " + std::to_string(pt.id));
      tree_ok = false;
    }
    if (i == 0 && pt.parent != -1) {
      out.push_back("tree shape: the first point must be the origin");
      tree_ok = false;
    }
    if (i > 0 && (pt.parent < 0 || pt.parent >= i)) {
      out.push_back("tree shape: " + P(i) + " needs a parent listed before it");
      tree_ok = false;
    }
  }
  if (!tree_ok) return out;

  // Proximity cardinality and placement of satellite points.
  std::set<std::pair<int, int>> satellite_slots;
  for (const auto& pt : d.points) {
    if (pt.extra < 0) continue;
    if (pt.parent < 0) {
      out.push_back("proximity: the origin cannot be a satellite point");
      continue;
    }
    const auto parent_prox = d.points[static_cast<std::size_t>(pt.parent)].proximities();
    if (std::find(parent_prox.begin(), parent_prox.end(), pt.extra) == parent_prox.end()) {
      out.push_back("proximity: " + P(pt.id) + " is proximate to " + P(pt.extra) + ", whose divisor does not pass through " +
                    P(pt.parent));
    }
    if (!satellite_slots.insert({pt.parent, pt.extra}).second) {
      out.push_back("proximity: two satellite points on the same pair of divisors (" + P(pt.parent) + ", " + P(pt.extra) + ")");
    }
  }

  // Branch paths.
  std::vector<int> on_branches(static_cast<std::size_t>(n), 0);
  std::vector<int> terminal_of(static_cast<std::size_t>(n), 0);
  for (const auto& b : d.branches) {
    const std::string who = "branch " + b.name + ": ";
    if (b.coefficient < 1) out.push_back(who + "coefficient must be positive");
    if (b.path.size() != b.multiplicities.size()) {
      out.push_back(who + "path and multiplicity list differ in length");
      continue;
    }
    if (b.path.empty()) {
      if (n > 0) out.push_back(who + "empty path");
      continue;
    }
    bool path_ok = true;
    for (std::size_t k = 0; k < b.path.size(); ++k) {
      const int p = b.path[k];
      if (p < 0 || p >= n) {
        out.push_back(who + "path refers to unknown point " + std::to_string(p));
        path_ok = false;
        break;
      }
      const int expected_parent = k == 0 ? -1 : b.path[k - 1];
      if (d.points[static_cast<std::size_t>(p)].parent != expected_parent) {
        out.push_back(who + "path is not a chain from the origin at " + P(p));
        path_ok = false;
        break;
      }
      if (b.multiplicities[k] < 1) {
        out.push_back(who + "non-positive multiplicity at " + P(p));
        path_ok = false;
      }
    }
    if (!path_ok) continue;
    for (int p : b.path) ++on_branches[static_cast<std::size_t>(p)];
    ++terminal_of[static_cast<std::size_t>(b.path.back())];

    if (b.multiplicities.back() != 1) {
      out.push_back("SNC-completeness: " + who + "ends at " + P(b.path.back()) + " with multiplicity " +
                    std::to_string(b.multiplicities.back()));
    }
    for (std::size_t k = 0; k < b.path.size(); ++k) {
      long long sum = 0;
      for (std::size_t l = k + 1; l < b.path.size(); ++l) {
        const auto prox = d.points[static_cast<std::size_t>(b.path[l])].proximities();
        if (std::find(prox.begin(), prox.end(), b.path[k]) != prox.end()) sum += b.multiplicities[l];
      }
      if (sum > b.multiplicities[k]) {
        out.push_back("proximity inequality: " + who + "multiplicity " + std::to_string(b.multiplicities[k]) + " at " +
                      P(b.path[k]) + " below the sum " + std::to_string(sum) + " of its proximate points");
      } else if (k + 1 < b.path.size() && sum != b.multiplicities[k]) {
        out.push_back("SNC-completeness: " + who + "stops before its strict transform leaves the divisor of " + P(b.path[k]));
      }
    }
    if (b.exponents) {
      const auto own = multiplicity_sequence(*b.exponents);
      if (b.path.size() < own.size()) {
        out.push_back("SNC-completeness: " + who + "path shorter than the resolution of " + b.exponents->to_string());
      } else {
        const auto expect = extended_sequence(*b.exponents, static_cast<int>(b.path.size()));
        for (std::size_t k = 0; k < b.path.size(); ++k) {
          const auto& pt = d.points[static_cast<std::size_t>(b.path[k])];
          const int want_extra = expect[k].extra < 0 ? -1 : b.path[static_cast<std::size_t>(expect[k].extra)];
          if (expect[k].multiplicity != b.multiplicities[k] || pt.extra != want_extra) {
            out.push_back("exponents: " + who + "point " + P(b.path[k]) + " disagrees with " + b.exponents->to_string());
            break;
          }
        }
      }
    }
  }

  // Proximity inequality on total multiplicities.
  const auto total = d.total_multiplicities();
  const auto prox = d.proximate_points();
  for (int p = 0; p < n; ++p) {
    long long sum = 0;
    for (int q : prox[static_cast<std::size_t>(p)]) sum += total[static_cast<std::size_t>(q)];
    if (sum > total[static_cast<std::size_t>(p)]) {
      out.push_back("proximity inequality: " + P(p) + " has multiplicity " + std::to_string(total[static_cast<std::size_t>(p)]) +
                    " but its proximate points add up to " + std::to_string(sum));
    }
  }

  // Minimality.
  for (int p = 0; p < n; ++p) {
    const auto k = static_cast<std::size_t>(p);
    if (on_branches[k] == 0) {
      out.push_back("minimality: " + P(p) + " lies on no branch");
    } else if (p > 0 && on_branches[k] == 1 && terminal_of[k] == 1 && d.points[k].extra < 0) {
      out.push_back("minimality: " + P(p) + " is a free point on a single smooth branch and need not be blown up");
    }
  }
  return out;
}

}  // namespace jumpnum
