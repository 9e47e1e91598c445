#include <random>
#include <set>

#include "doctest.h"
#include "jumpnum/errors.hpp"
#include "jumpnum/rational.hpp"
#include "jumpnum/resolution.hpp"
#include "support/fixtures.hpp"
#include "support/random_curves.hpp"

using namespace jumpnum;

namespace {

using Edge = std::pair<std::string, std::string>;

std::set<Edge> edges(const ResolutionData& r) {
  std::set<Edge> out;
  for (int i = 0; i < r.size(); ++i) {
    for (int j = i + 1; j < r.size(); ++j) {
      if (r.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
        out.insert({r.names[static_cast<std::size_t>(i)], r.names[static_cast<std::size_t>(j)]});
      }
    }
  }
  return out;
}

std::vector<long long> diagonal(const ResolutionData& r) {
  std::vector<long long> d;
  for (int j = 0; j < r.exceptional; ++j) d.push_back(r.self_intersection(j));
  return d;
}

/// Determinant of the leading n x n block, by fraction-free elimination.
Rational leading_minor(const std::vector<std::vector<long long>>& m, int n) {
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)].emplace_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const Rational piv = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    det *= piv;
    for (int r = c + 1; r < n; ++r) {
      const Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / piv;
      for (int k = c; k < n; ++k) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * a[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("cusp resolution") {
  const auto r = resolve(jumpnum::testing::cusp34());
  CHECK(pullback_orders(jumpnum::testing::cusp34()) == std::vector<long long>{3, 4, 8, 12});
  CHECK(r.k == std::vector<long long>{1, 2, 4, 6});
  CHECK(r.a == std::vector<long long>{3, 4, 8, 12, 1});
  CHECK(diagonal(r) == std::vector<long long>{-4, -2, -2, -1});
  CHECK(edges(r) == std::set<Edge>{{"E0", "E3"}, {"E1", "E2"}, {"E2", "E3"}, {"E3", "C1"}});
  CHECK(r.valence == std::vector<int>{1, 1, 2, 3});
}

TEST_CASE("two cusps resolution") {
  const auto r = resolve(jumpnum::testing::two_cusps());
  CHECK(r.a == std::vector<long long>{4, 5, 5, 10, 10, 1, 1});
  CHECK(r.k == std::vector<long long>{1, 2, 2, 4, 4});
  CHECK(r.self_intersection(0) == -5);
  CHECK(edges(r) == std::set<Edge>{{"E0", "E3"}, {"E0", "E4"}, {"E1", "E3"}, {"E2", "E4"}, {"E3", "C1"}, {"E4", "C2"}});
  CHECK(r.valence[3] == 3);
  CHECK(r.valence[4] == 3);
  CHECK(r.valence[0] == 2);
  CHECK(r.valence[1] == 1);
}

TEST_CASE("single point resolutions") {
  const auto node = resolve(jumpnum::testing::node());
  CHECK(node.a == std::vector<long long>{2, 1, 1});
  CHECK(node.k == std::vector<long long>{1});
  CHECK(node.self_intersection(0) == -1);
  CHECK(node.valence == std::vector<int>{2});

  const auto smooth = resolve(build_diagram({{"L", CharExponents({1}), 1}}, {}));
  CHECK(smooth.a == std::vector<long long>{1, 1});
  CHECK(smooth.k == std::vector<long long>{1});
}

TEST_CASE("non-reduced components carry their coefficient") {
  const auto r = resolve(build_diagram({{"A", CharExponents({2, 3}), 2}, {"L", CharExponents({1}), 3}}, {}));
  CHECK(r.a == std::vector<long long>{7, 9, 18, 2, 3});
}

TEST_CASE("dot export") {
  const auto dot = to_dot(resolve(jumpnum::testing::cusp34()));
  CHECK(dot.find("E3 [a=12,k=6,self=-1]") != std::string::npos);
  CHECK(dot.find("C1 [a=1]") != std::string::npos);
  CHECK(dot.find("E0 -- E3") != std::string::npos);
}

TEST_CASE("resolve refuses invalid diagrams") {
  EnriquesDiagram d = jumpnum::testing::cusp34();
  d.points.push_back({4, 3, -1});
  CHECK_THROWS_AS(resolve(d), InputError);
}

TEST_CASE("lattice properties on random diagrams") {
  std::mt19937_64 rng(33);
  for (int iter = 0; iter < 200; ++iter) {
    const auto c = jumpnum::testing::random_curve(rng);
    const auto r = resolve(c.diagram);
    for (int j = 0; j < r.exceptional; ++j) {
      CHECK(r.self_intersection(j) == -1 - static_cast<long long>(r.proximate[static_cast<std::size_t>(j)].size()));
      for (int i = 0; i < r.size(); ++i) {
        const auto v = r.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        CHECK(v == r.intersection[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        if (i != j) CHECK((v == 0 || v == 1));
      }
      for (const auto& chain : proximity_chains(r, j)) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
          CHECK(r.a[static_cast<std::size_t>(chain[i])] > static_cast<long long>(i + 1) * r.a[static_cast<std::size_t>(j)]);
        }
      }
    }
    for (long long v : total_transform_products(r)) CHECK(v == 0);
    for (int n = 1; n <= r.exceptional; ++n) {
      const Rational m = leading_minor(r.intersection, n);
      CHECK(m.sign() == (n % 2 == 1 ? -1 : 1));
    }
    // Dual graph of the exceptional divisors is a tree.
    int edge_count = 0;
    for (int i = 0; i < r.exceptional; ++i) {
      for (int j = i + 1; j < r.exceptional; ++j) edge_count += static_cast<int>(r.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    CHECK(edge_count == r.exceptional - 1);
  }
}
