#include <numeric>
#include <random>

#include "doctest.h"
#include "jumpnum/errors.hpp"
#include "jumpnum/puiseux.hpp"
#include "jumpnum/resolution.hpp"
#include "support/series.hpp"

using namespace jumpnum;
using jumpnum::testing::Series;

namespace {

Poly2 X(int i, int j, long long c = 1) { return Poly2::monomial(Rational(c), i, j); }

std::size_t parse_offset(const std::string& text) {
  try {
    parse_polynomial(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

std::vector<std::string> exponent_strings(const std::vector<BranchResult>& bs) {
  std::vector<std::string> out;
  for (const auto& b : bs) out.push_back(b.exponents.to_string());
  return out;
}

Series rational_series(const std::vector<Elem>& s) {
  Series out;
  for (const auto& e : s) out.push_back(e.rational());
  return out;
}

/// (y - p(x))^a - c x^b, or the same with x and y exchanged: one branch.
Poly2 random_branch(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> small(-2, 2), pick(0, 3);
  const int a = 1 + pick(rng) % 3;
  int b = a + 1 + pick(rng);
  while (std::gcd(a, b) != 1) ++b;
  Poly2 p;
  for (int k = 1; k <= 3; ++k) p += X(k, 0, small(rng));
  const long long c = std::vector<long long>{1, 2, -1, 3}[static_cast<std::size_t>(pick(rng))];
  Poly2 g = (X(0, 1) - p).pow(a) - X(b, 0, c);
  if (pick(rng) == 0) {
    Poly2 swapped;
    for (const auto& [m, coef] : g.terms()) swapped += Poly2::monomial(coef, m.second, m.first);
    g = swapped;
  }
  return g;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_polynomial("x^4 - y^3") == X(4, 0) - X(0, 3));
  CHECK(parse_polynomial("(x^3-y^2)*(x^2-y^3)") == X(5, 0) - X(3, 3) - X(2, 2) + X(0, 5));
  CHECK(parse_polynomial("-x^2 + 1/2*x*y") == Poly2::monomial(Rational(1, 2), 1, 1) - X(2, 0));
  CHECK(parse_polynomial("((x))^2 - +y") == X(2, 0) - X(0, 1));
  CHECK(parse_polynomial("3 * 4/6") == Poly2(Rational(2)));
  CHECK(parse_offset("x^") == 2);
  CHECK(parse_offset("x + z") == 4);
  CHECK(parse_offset("2x") == 1);
  CHECK(parse_offset("1/0") == 2);
  CHECK(parse_offset("(x") == 2);
  CHECK(parse_offset("x)") == 1);
  CHECK(parse_offset("") == 0);
  CHECK(parse_offset("x^-1") == 2);
  CHECK(parse_offset("x^100000") == 2);
  CHECK(parse_offset("xy") == 0);
  CHECK_THROWS_AS(parse_polynomial("x $ y"), InputError);
}

TEST_CASE("parse round trip") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 6), c(-9, 9), d(1, 4);
  for (int iter = 0; iter < 200; ++iter) {
    Poly2 f;
    for (int k = 0; k < 5; ++k) f += Poly2::monomial(Rational(c(rng), d(rng)), e(rng), e(rng));
    CHECK(parse_polynomial(f.to_string()) == f);
  }
}

TEST_CASE("branches of the examples") {
  const auto cusp = puiseux_branches(parse_polynomial("x^4 - y^3"));
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].exponents == CharExponents({3, 4}));
  CHECK(cusp[0].coefficient == 1);
  CHECK(to_diagram(cusp).points.size() == 4);

  const auto ex1 = puiseux_branches(parse_polynomial("(x^3-y^2)*(x^2-y^3)"));
  CHECK(exponent_strings(ex1) == std::vector<std::string>{"(2;3)", "(2;3)"});
  CHECK(ex1[0].shared[1] == 1);
  const auto r = resolve(to_diagram(ex1));
  CHECK(r.a == std::vector<long long>{4, 5, 5, 10, 10, 1, 1});

  const auto lines = puiseux_branches(parse_polynomial("x^2 - y^2"));
  CHECK(exponent_strings(lines) == std::vector<std::string>{"(1;)", "(1;)"});
  CHECK(lines[0].shared[1] == 1);

  const auto node = puiseux_branches(parse_polynomial("x*y"));
  REQUIRE(node.size() == 2);
  CHECK(to_diagram(node).points.size() == 1);
}

TEST_CASE("conjugate branches") {
  const auto circle = puiseux_branches(parse_polynomial("x^2 + y^2"));
  REQUIRE(circle.size() == 2);
  CHECK(circle[0].class_size == 2);
  CHECK(circle[0].conjugacy_class == circle[1].conjugacy_class);
  CHECK(circle[0].shared[1] == 1);

  const auto four = puiseux_branches(parse_polynomial("y^4 - 2*x^4"));
  REQUIRE(four.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(four[i].shared[j] == (i == j ? 0 : 1));
  }

  const auto tangent = puiseux_branches(parse_polynomial("(y - x)^2 - 2*x^4"));
  REQUIRE(tangent.size() == 2);
  CHECK(tangent[0].shared[1] == 2);
  CHECK(tangent[0].class_size == 2);

  CHECK_THROWS_AS(puiseux_branches(parse_polynomial("y^2 - 2*x^2"), 0), ExtensionDepthError);
  CHECK(puiseux_branches(parse_polynomial("y^2 - 2*x^2"), 1).size() == 2);
}

TEST_CASE("contacts and coefficients") {
  const auto cusps = puiseux_branches(parse_polynomial("(y^2 - x^3)*(y^2 + x^3)"));
  REQUIRE(cusps.size() == 2);
  CHECK(cusps[0].shared[1] == 3);

  const auto tacnode = puiseux_branches(parse_polynomial("(y - x^2)*(y + x^2)"));
  REQUIRE(tacnode.size() == 2);
  CHECK(tacnode[0].shared[1] == 2);

  const auto nonreduced = puiseux_branches(parse_polynomial("(y^2 - x^3)^2*x"));
  REQUIRE(nonreduced.size() == 2);
  long long total = 0;
  for (const auto& b : nonreduced) {
    total += b.coefficient * b.exponents.multiplicity();
    if (b.exponents == CharExponents({2, 3})) CHECK(b.coefficient == 2);
  }
  CHECK(total == 5);

  const auto vertical = puiseux_branches(parse_polynomial("y^3 - x^2"));
  REQUIRE(vertical.size() == 1);
  CHECK(vertical[0].exponents == CharExponents({2, 3}));

  CHECK_THROWS_AS(puiseux_branches(Poly2()), InputError);
  CHECK_THROWS_AS(puiseux_branches(parse_polynomial("1 + x")), InputError);
}

TEST_CASE("round trip for x^p - y^q") {
  for (int p = 2; p <= 9; ++p) {
    for (int q = p + 1; q <= 11; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto bs = puiseux_branches(X(0, p) - X(q, 0));
      REQUIRE(bs.size() == 1);
      CHECK(bs[0].exponents == CharExponents({p, q}));
      const auto swapped = puiseux_branches(X(p, 0) - X(0, q));
      REQUIRE(swapped.size() == 1);
      CHECK(swapped[0].exponents == CharExponents({p, q}));
      for (long long v : total_transform_products(resolve(to_diagram(bs)))) CHECK(v == 0);
    }
  }
}

TEST_CASE("expansions against intersection orders") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> count(1, 3);
  const std::size_t N = 36;
  int checked = 0;
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Poly2> factors;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) factors.push_back(random_branch(rng));
    Poly2 f(Rational(1));
    for (const auto& g : factors) f = f * g;
    const auto bs = puiseux_branches(f);
    long long mult = 0;
    for (const auto& b : bs) mult += b.coefficient * b.exponents.multiplicity();
    CHECK(mult == f.order());

    // Which factor carries each branch, read off the expansions.
    std::vector<int> owner(bs.size(), -1);
    std::vector<std::pair<Series, Series>> par(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (bs[i].class_size != 1) continue;
      const auto pz = parametrize(bs[i], static_cast<int>(N));
      par[i] = {rational_series(pz.x), rational_series(pz.y)};
      CHECK(jumpnum::testing::order_along(f.terms(), par[i].first, par[i].second, N) == N);
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (jumpnum::testing::order_along(factors[j].terms(), par[i].first, par[i].second, N) == N) owner[i] = static_cast<int>(j);
      }
      CHECK(owner[i] >= 0);
    }
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = 0; j < bs.size(); ++j) {
        if (i == j || owner[i] < 0 || owner[j] < 0 || owner[i] == owner[j]) continue;
        const auto& g = factors[static_cast<std::size_t>(owner[j])];
        const std::size_t ord = jumpnum::testing::order_along(g.terms(), par[i].first, par[i].second, N);
        if (ord >= N) continue;
        const long long predicted = branch_intersection(bs[i].exponents, bs[j].exponents, bs[i].shared[j]);
        CHECK(static_cast<long long>(ord) == predicted);
        ++checked;
      }
    }
    CHECK(validate(to_diagram(bs)).empty());
  }
  CHECK(checked > 10);
}
