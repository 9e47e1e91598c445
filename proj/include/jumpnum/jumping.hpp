#pragma once

// Jumping numbers of a curve germ from its resolution data: candidates,
// the contribution criterion, relevance of exceptional divisors, and the
// full jump set through antinef closures of rounded divisors.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jumpnum/rational.hpp"
#include "jumpnum/resolution.hpp"

namespace jumpnum {

/// Integer divisor on the resolution: coefficients over the exceptional
/// divisors and over the strict transform components.
struct DivisorVector {
  std::vector<long long> exceptional;
  std::vector<long long> strict;

  friend bool operator==(const DivisorVector&, const DivisorVector&) = default;
};

DivisorVector zero_vector(const ResolutionData& r);
/// Componentwise a <= b.
bool dominated(const DivisorVector& a, const DivisorVector& b);
/// d . E_j for an exceptional E_j.
long long dot(const ResolutionData& r, const DivisorVector& d, int j);
std::string to_string(const DivisorVector& d);

/// (k_j + n) / a_j for n >= 1, up to bound.
std::vector<Rational> candidates(const ResolutionData& r, int j, const Rational& bound);
bool is_candidate(const ResolutionData& r, int j, const Rational& lambda);

/// floor(lambda * pi^*C) with every coefficient rounded down.
DivisorVector round_down(const ResolutionData& r, const Rational& lambda);
/// -floor(lambda * pi^*C) . E_j
long long criterion_value(const ResolutionData& r, int j, const Rational& lambda);
/// Whether E_j contributes lambda. Throws InputError when lambda is not a
/// candidate for E_j.
bool contributes(const ResolutionData& r, int j, const Rational& lambda);

struct Relevance {
  int divisor = 0;
  int valence = 0;
  bool relevant = false;
  std::optional<Rational> witness;  // 1 - 1/a_j when relevant
};

Relevance relevant(const ResolutionData& r, int j);
std::vector<Relevance> relevance_table(const ResolutionData& r);

/// Checks, for every exceptional divisor, that valence >= 3 holds exactly
/// when some candidate in (0,1] passes the criterion, and that the witness
/// 1 - 1/a_j passes when it does. Returns the failures.
std::vector<std::string> check_relevance_theorem(const ResolutionData& r);

/// Smallest antinef divisor above d (strict part fixed) by unloading.
/// With a generator the divisor to unload is picked at random each round.
DivisorVector antinef_closure(const ResolutionData& r, DivisorVector d, std::mt19937_64* rng = nullptr);

enum class Side { at, left_limit };

/// Divisor of the multiplier ideal at lambda, or just below it.
DivisorVector multiplier_vector(const ResolutionData& r, const Rational& lambda, Side side);

bool is_jumping(const ResolutionData& r, const Rational& lambda);

struct JumpRecord {
  Rational lambda;
  std::vector<int> critical;      // components with lambda * a_i integral
  std::vector<int> contributing;  // exceptional divisors passing the criterion
};

struct JumpReport {
  Rational bound;
  std::vector<JumpRecord> records;
  Rational lct;
  std::vector<Relevance> relevance;
};

/// All jumping numbers in (0, bound].
JumpReport jumping_numbers(const ResolutionData& r, const Rational& bound = Rational(1));

/// Throws InputError when lambda is not a jumping number.
JumpRecord contribution_report(const ResolutionData& r, const Rational& lambda);

/// Jumping status of lambda > 1 predicted from a report on (0, bound].
/// Throws InputError when lambda - 1 lies outside the report.
bool skoda_shift(const JumpReport& report, const Rational& lambda);

}  // namespace jumpnum
