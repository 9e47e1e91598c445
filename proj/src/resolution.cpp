#include "jumpnum/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "jumpnum/errors.hpp"

namespace jumpnum {

std::vector<long long> pullback_orders(const EnriquesDiagram& d) {
  const auto m = d.total_multiplicities();
  std::vector<long long> a(d.points.size(), 0);
  for (const auto& p : d.points) {
    long long v = m[static_cast<std::size_t>(p.id)];
    for (int q : p.proximities()) v += a[static_cast<std::size_t>(q)];
    a[static_cast<std::size_t>(p.id)] = v;
  }
  return a;
}

std::vector<long long> canonical_orders(const EnriquesDiagram& d) {
  std::vector<long long> k(d.points.size(), 0);
  for (const auto& p : d.points) {
    long long v = 1;
    for (int q : p.proximities()) v += k[static_cast<std::size_t>(q)];
    k[static_cast<std::size_t>(p.id)] = v;
  }
  return k;
}

std::vector<std::vector<long long>> intersection_matrix(const EnriquesDiagram& d) {
  const int ne = static_cast<int>(d.points.size());
  const int n = ne + static_cast<int>(d.branches.size());
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  const auto prox = d.proximate_points();
  auto M = [&](int i, int j) -> long long& { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int p = 0; p < ne; ++p) M(p, p) = -1 - static_cast<long long>(prox[static_cast<std::size_t>(p)].size());
  for (const auto& q : d.points) {
    for (int p : q.proximities()) {
      // E_p and E_q stay adjacent unless a later point lies on both.
      bool separated = false;
      for (const auto& r : d.points) {
        if (r.id <= q.id) continue;
        const auto pr = r.proximities();
        if (std::find(pr.begin(), pr.end(), p) != pr.end() && std::find(pr.begin(), pr.end(), q.id) != pr.end()) {
          separated = true;
          break;
        }
      }
      if (!separated) M(p, q.id) = M(q.id, p) = 1;
    }
  }
  for (std::size_t b = 0; b < d.branches.size(); ++b) {
    const int c = ne + static_cast<int>(b);
    if (!d.branches[b].path.empty()) {
      const int t = d.branches[b].path.back();
      M(c, t) = M(t, c) = 1;
    }
  }
  return m;
}

std::vector<int> valences(const std::vector<std::vector<long long>>& intersection, int exceptional) {
  std::vector<int> v(static_cast<std::size_t>(exceptional), 0);
  for (int j = 0; j < exceptional; ++j) {
    const auto& row = intersection[static_cast<std::size_t>(j)];
    for (int i = 0; i < static_cast<int>(row.size()); ++i) {
      if (i != j) v[static_cast<std::size_t>(j)] += static_cast<int>(row[static_cast<std::size_t>(i)]);
    }
  }
  return v;
}

std::vector<long long> total_transform_products(const ResolutionData& r) {
  std::vector<long long> out(static_cast<std::size_t>(r.exceptional), 0);
  for (int j = 0; j < r.exceptional; ++j) {
    for (int i = 0; i < r.size(); ++i) out[static_cast<std::size_t>(j)] += r.a[static_cast<std::size_t>(i)] * r.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return out;
}

ResolutionData resolve(const EnriquesDiagram& d) {
  const auto problems = validate(d);
  if (!problems.empty()) {
    std::string msg = "invalid diagram:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InputError(msg);
  }
  ResolutionData r;
  r.exceptional = static_cast<int>(d.points.size());
  r.strict = static_cast<int>(d.branches.size());
  for (int p = 0; p < r.exceptional; ++p) r.names.push_back("E" + std::to_string(p));
  for (int b = 0; b < r.strict; ++b) r.names.push_back("C" + std::to_string(b + 1));
  r.a = pullback_orders(d);
  for (const auto& b : d.branches) r.a.push_back(b.coefficient);
  r.k = canonical_orders(d);
  r.intersection = intersection_matrix(d);
  r.valence = valences(r.intersection, r.exceptional);
  r.proximate = d.proximate_points();
  const auto products = total_transform_products(r);
  for (int j = 0; j < r.exceptional; ++j) {
    if (products[static_cast<std::size_t>(j)] != 0) {
      throw InvariantError("total transform meets " + r.names[static_cast<std::size_t>(j)] + " with degree " +
                           std::to_string(products[static_cast<std::size_t>(j)]));
    }
  }
  return r;
}

std::vector<std::vector<int>> proximity_chains(const ResolutionData& r, int j) {
  const auto& prox = r.proximate[static_cast<std::size_t>(j)];
  std::vector<int> parent(r.proximate.size(), -1);
  for (std::size_t p = 0; p < r.proximate.size(); ++p) {
    for (int q : r.proximate[p]) parent[static_cast<std::size_t>(q)] = static_cast<int>(p);
  }
  std::vector<std::vector<int>> chains;
  std::vector<bool> used(prox.size(), false);
  for (std::size_t s = 0; s < prox.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> chain{prox[s]};
    used[s] = true;
    bool extended = true;
    while (extended) {
      extended = false;
      for (std::size_t t = 0; t < prox.size(); ++t) {
        if (used[t]) continue;
        if (parent[static_cast<std::size_t>(prox[t])] == chain.back()) {
          chain.push_back(prox[t]);
          used[t] = true;
          extended = true;
          break;
        }
      }
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

std::string to_dot(const ResolutionData& r) {
  std::ostringstream os;
  os << "graph dual {\n";
  for (int i = 0; i < r.size(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    os << "  " << r.names[u] << " [label=\"" << r.names[u] << " [a=" << r.a[u];
    if (i < r.exceptional) os << ",k=" << r.k[u] << ",self=" << r.self_intersection(i);
    os << "]\"";
    if (i >= r.exceptional) os << ", shape=plaintext";
    os << "];\n";
  }
  for (int i = 0; i < r.size(); ++i) {
    for (int j = i + 1; j < r.size(); ++j) {
      if (r.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
        os << "  " << r.names[static_cast<std::size_t>(i)] << " -- " << r.names[static_cast<std::size_t>(j)] << ";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace jumpnum
