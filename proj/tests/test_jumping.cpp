#include <random>

#include "doctest.h"
#include "jumpnum/errors.hpp"
#include "jumpnum/jumping.hpp"
#include "support/fixtures.hpp"
#include "support/random_curves.hpp"

using namespace jumpnum;

namespace {

std::vector<Rational> lambdas(const JumpReport& rep) {
  std::vector<Rational> out;
  for (const auto& rec : rep.records) out.push_back(rec.lambda);
  return out;
}

std::vector<Rational> R(std::initializer_list<std::pair<long long, long long>> v) {
  std::vector<Rational> out;
  for (const auto& [p, q] : v) out.emplace_back(p, q);
  return out;
}

DivisorVector V(std::vector<long long> e, std::vector<long long> s) { return {std::move(e), std::move(s)}; }

}  // namespace

TEST_CASE("candidates") {
  const auto r = resolve(jumpnum::testing::cusp34());
  CHECK(candidates(r, 0, Rational(1)) == R({{2, 3}, {1, 1}}));
  CHECK(candidates(r, 3, Rational(1)) == R({{7, 12}, {8, 12}, {9, 12}, {10, 12}, {11, 12}, {1, 1}}));

  ResolutionData unit;
  unit.exceptional = 1;
  unit.a = {1};
  unit.k = {0};
  CHECK(candidates(unit, 0, Rational(3)) == R({{1, 1}, {2, 1}, {3, 1}}));
}

TEST_CASE("contribution criterion") {
  const auto r = resolve(jumpnum::testing::cusp34());
  CHECK(round_down(r, Rational(11, 12)) == V({2, 3, 7, 11}, {0}));
  CHECK(criterion_value(r, 3, Rational(11, 12)) == 2);
  CHECK(contributes(r, 3, Rational(11, 12)));
  CHECK_FALSE(contributes(r, 2, Rational(5, 8)));
  CHECK_THROWS_AS(contributes(r, 3, Rational(5, 8)), InputError);
  CHECK_THROWS_AS(contributes(r, 3, Rational(1, 2)), InputError);

  const auto e = resolve(jumpnum::testing::two_cusps());
  CHECK_FALSE(contributes(e, 0, Rational(1, 2)));
}

TEST_CASE("relevance") {
  const auto r = resolve(jumpnum::testing::cusp34());
  const auto table = relevance_table(r);
  for (int j = 0; j < 4; ++j) CHECK(table[static_cast<std::size_t>(j)].relevant == (j == 3));
  CHECK(*table[3].witness == Rational(11, 12));
  CHECK(check_relevance_theorem(r).empty());

  const auto e = resolve(jumpnum::testing::two_cusps());
  CHECK(relevant(e, 3).relevant);
  CHECK(relevant(e, 4).relevant);
  CHECK(*relevant(e, 3).witness == Rational(9, 10));
  CHECK(*relevant(e, 4).witness == Rational(9, 10));
  CHECK_FALSE(relevant(e, 0).relevant);

  CHECK_FALSE(relevant(resolve(jumpnum::testing::node()), 0).relevant);
}

TEST_CASE("antinef closure examples") {
  const auto r = resolve(jumpnum::testing::cusp34());
  CHECK(antinef_closure(r, V({0, 0, 0, 1}, {0})) == V({1, 1, 2, 3}, {0}));
  CHECK(antinef_closure(r, V({3, 4, 8, 12}, {0})) == V({3, 4, 8, 12}, {0}));
  CHECK(antinef_closure(r, zero_vector(r)) == zero_vector(r));
}

TEST_CASE("multiplier vectors") {
  const auto r = resolve(jumpnum::testing::cusp34());
  CHECK(multiplier_vector(r, Rational(7, 12), Side::at) == V({0, 0, 0, 1}, {0}));
  CHECK(multiplier_vector(r, Rational(7, 12), Side::left_limit) == V({0, 0, 0, 0}, {0}));
  CHECK(multiplier_vector(r, Rational(1, 4), Side::at) == zero_vector(r));
}

TEST_CASE("jumping numbers of the examples") {
  const auto cusp = jumping_numbers(resolve(jumpnum::testing::cusp34()));
  CHECK(lambdas(cusp) == R({{7, 12}, {5, 6}, {11, 12}, {1, 1}}));
  CHECK(cusp.lct == Rational(7, 12));

  const auto two = jumping_numbers(resolve(jumpnum::testing::two_cusps()));
  CHECK(lambdas(two) == R({{1, 2}, {7, 10}, {9, 10}, {1, 1}}));
  CHECK(two.lct == Rational(1, 2));

  CHECK(lambdas(jumping_numbers(resolve(jumpnum::testing::node()))) == R({{1, 1}}));
  CHECK(lambdas(jumping_numbers(resolve(jumpnum::testing::node()), Rational(3))) == R({{1, 1}, {2, 1}, {3, 1}}));
}

TEST_CASE("contribution reports") {
  const auto e = resolve(jumpnum::testing::two_cusps());
  const auto half = contribution_report(e, Rational(1, 2));
  CHECK(half.critical == std::vector<int>{0, 3, 4});
  CHECK(half.contributing.empty());

  const auto r = resolve(jumpnum::testing::cusp34());
  const auto rec = contribution_report(r, Rational(11, 12));
  CHECK(rec.critical == std::vector<int>{3});
  CHECK(rec.contributing == std::vector<int>{3});
  CHECK(contribution_report(r, Rational(1)).critical == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(contribution_report(r, Rational(5, 8)), InputError);
}

TEST_CASE("skoda shift") {
  const auto rep = jumping_numbers(resolve(jumpnum::testing::cusp34()));
  CHECK(skoda_shift(rep, Rational(19, 12)));
  CHECK(skoda_shift(rep, Rational(2)));
  CHECK_FALSE(skoda_shift(rep, Rational(13, 8)));
  CHECK_THROWS_AS(skoda_shift(rep, Rational(1, 2)), InputError);
  CHECK_THROWS_AS(skoda_shift(rep, Rational(5, 2)), InputError);
}

TEST_CASE("jump properties on random diagrams") {
  std::mt19937_64 rng(45);
  for (int iter = 0; iter < 120; ++iter) {
    const auto c = jumpnum::testing::random_curve(rng);
    const auto r = resolve(c.diagram);
    CHECK(check_relevance_theorem(r).empty());
    const auto rep = jumping_numbers(r);
    REQUIRE(!rep.records.empty());
    CHECK(rep.records.back().lambda == Rational(1));
    CHECK(rep.lct == rep.records.front().lambda);
    for (const auto& rec : rep.records) CHECK(!rec.critical.empty());
    for (int j = 0; j < r.exceptional; ++j) {
      for (const auto& l : candidates(r, j, Rational(1))) {
        if (!contributes(r, j, l)) continue;
        const bool listed = std::any_of(rep.records.begin(), rep.records.end(), [&](const JumpRecord& x) { return x.lambda == l; });
        CHECK_MESSAGE(listed, l.to_string());
      }
    }
  }
}

TEST_CASE("unloading properties") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 80; ++iter) {
    const auto c = jumpnum::testing::random_curve(rng);
    const auto r = resolve(c.diagram);
    std::uniform_int_distribution<long long> coef(0, 5);
    DivisorVector d = zero_vector(r);
    for (auto& x : d.exceptional) x = coef(rng);
    for (auto& x : d.strict) x = coef(rng) % 2;
    const auto cl = antinef_closure(r, d);
    CHECK(dominated(d, cl));
    for (int j = 0; j < r.exceptional; ++j) CHECK(dot(r, cl, j) <= 0);
    CHECK(antinef_closure(r, cl) == cl);
    DivisorVector bigger = d;
    for (auto& x : bigger.exceptional) x += coef(rng) % 3;
    CHECK(dominated(cl, antinef_closure(r, bigger)));
    for (int k = 0; k < 5; ++k) CHECK(antinef_closure(r, d, &rng) == cl);
  }
}
