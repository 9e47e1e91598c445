#include <random>

#include "doctest.h"
#include "jumpnum/cluster.hpp"
#include "jumpnum/errors.hpp"
#include "support/fixtures.hpp"
#include "support/random_curves.hpp"

using namespace jumpnum;

namespace {

std::vector<std::vector<int>> proximity_lists(const EnriquesDiagram& d) {
  std::vector<std::vector<int>> out;
  for (const auto& p : d.points) out.push_back(p.proximities());
  return out;
}

bool has_violation(const std::vector<std::string>& v, const std::string& tag) {
  for (const auto& s : v) {
    if (s.rfind(tag, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("cusp diagram") {
  const auto d = jumpnum::testing::cusp34();
  REQUIRE(d.points.size() == 4);
  CHECK(proximity_lists(d) == std::vector<std::vector<int>>{{}, {0}, {1, 0}, {2, 0}});
  CHECK(d.total_multiplicities() == std::vector<long long>{3, 1, 1, 1});
  CHECK(validate(d).empty());
}

TEST_CASE("two cusps with distinct tangents") {
  const auto d = jumpnum::testing::two_cusps();
  REQUIRE(d.points.size() == 5);
  CHECK(d.total_multiplicities() == std::vector<long long>{4, 1, 1, 1, 1});
  CHECK(d.branches[0].path == std::vector<int>{0, 1, 3});
  CHECK(d.branches[1].path == std::vector<int>{0, 2, 4});
  CHECK(proximity_lists(d) == std::vector<std::vector<int>>{{}, {0}, {0}, {1, 0}, {2, 0}});
}

TEST_CASE("node") {
  const auto d = jumpnum::testing::node();
  REQUIRE(d.points.size() == 1);
  CHECK(d.total_multiplicities() == std::vector<long long>{2});
  CHECK(validate(d).empty());
}

TEST_CASE("tangent smooth branches and tacnode") {
  const auto d = build_diagram({{"A", CharExponents({1}), 1}, {"B", CharExponents({1}), 1}}, {{0, 1, 2}});
  REQUIRE(d.points.size() == 2);
  CHECK(d.total_multiplicities() == std::vector<long long>{2, 2});
  CHECK(validate(d).empty());
}

TEST_CASE("build rejects inconsistent input") {
  const BranchSpec smooth{"s", CharExponents({1}), 1};
  const BranchSpec cusp{"c", CharExponents({2, 3}), 1};
  // Tree condition.
  CHECK_THROWS_AS(build_diagram({smooth, smooth, smooth}, {{0, 1, 3}, {0, 2, 2}, {1, 2, 1}}), InputError);
  // A smooth branch cannot pass through the cusp's satellite point.
  CHECK_THROWS_AS(build_diagram({cusp, smooth}, {{0, 1, 3}}), InputError);
  // Two equal cusps sharing two points would also share the satellite one.
  CHECK_THROWS_AS(build_diagram({cusp, cusp}, {{0, 1, 2}}), InputError);
  CHECK_THROWS_AS(build_diagram({cusp, cusp}, {{0, 1, 0}}), InputError);
  CHECK_THROWS_AS(build_diagram({cusp, cusp}, {{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(build_diagram({}, {}), InputError);
}

TEST_CASE("validate reports violations") {
  EnriquesDiagram bad;
  bad.points = {{0, -1, -1}, {1, 0, -1}};
  bad.branches = {{"b", std::nullopt, 1, {0, 1}, {1, 3}}};
  CHECK(has_violation(validate(bad), "proximity inequality"));

  EnriquesDiagram isolated = jumpnum::testing::cusp34();
  isolated.points.push_back({4, 1, -1});
  CHECK(has_violation(validate(isolated), "minimality"));

  EnriquesDiagram extra_blowup;
  extra_blowup.points = {{0, -1, -1}, {1, 0, -1}};
  extra_blowup.branches = {{"b", CharExponents({1}), 1, {0, 1}, {1, 1}}};
  CHECK(has_violation(validate(extra_blowup), "minimality"));

  EnriquesDiagram truncated;
  truncated.points = {{0, -1, -1}, {1, 0, -1}};
  truncated.branches = {{"b", std::nullopt, 1, {0, 1}, {2, 1}}};
  CHECK(has_violation(validate(truncated), "SNC-completeness"));

  EnriquesDiagram cycle;
  cycle.points = {{0, -1, -1}, {1, 2, -1}, {2, 1, -1}};
  CHECK(has_violation(validate(cycle), "tree shape"));

  EnriquesDiagram misplaced = jumpnum::testing::two_cusps();
  misplaced.points[4].extra = 1;
  CHECK(has_violation(validate(misplaced), "proximity"));
}

TEST_CASE("random diagrams round trip") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto c = jumpnum::testing::random_curve(rng);
    const auto& d = c.diagram;
    CHECK(validate(d).empty());
    long long root = 0;
    for (std::size_t b = 0; b < c.branches.size(); ++b) {
      root += c.branches[b].coefficient * c.branches[b].exponents.multiplicity();
      // The branch's own points come back unchanged.
      const auto own = multiplicity_sequence(c.branches[b].exponents);
      const auto& path = d.branches[b].path;
      REQUIRE(path.size() >= own.size());
      for (std::size_t t = 0; t < own.size(); ++t) {
        CHECK(d.branches[b].multiplicities[t] == own[t].multiplicity);
        const auto& pt = d.points[static_cast<std::size_t>(path[t])];
        CHECK(pt.kind() == own[t].kind);
        if (own[t].extra >= 0) CHECK(pt.extra == path[static_cast<std::size_t>(own[t].extra)]);
      }
    }
    CHECK(d.total_multiplicities().front() == root);
  }
}
