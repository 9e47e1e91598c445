#pragma once

// Combinatorics of one analytic branch: characteristic exponents, the
// multiplicity sequence of its infinitely near points, its semigroup.

#include <string>
#include <vector>

namespace jumpnum {

/// Characteristic exponents (b0; b1, ..., bg), b0 the multiplicity.
class CharExponents {
 public:
  CharExponents() : beta_{1} {}
  /// Throws InputError unless the sequence is a valid exponent list.
  explicit CharExponents(std::vector<long long> beta);

  const std::vector<long long>& beta() const { return beta_; }
  long long multiplicity() const { return beta_.front(); }
  int g() const { return static_cast<int>(beta_.size()) - 1; }
  /// e_q = gcd(b0, ..., bq), q = 0..g.
  std::vector<long long> e() const;
  /// "(3;4)", "(1;)"
  std::string to_string() const;

  friend bool operator==(const CharExponents&, const CharExponents&) = default;

 private:
  std::vector<long long> beta_;
};

enum class PointKind { free_point, satellite };

/// One infinitely near point of a branch, positions counted from 0.
struct SeqEntry {
  long long multiplicity = 1;
  PointKind kind = PointKind::free_point;
  /// For satellites: position of the earlier point (besides the
  /// predecessor) this point is proximate to; -1 for free points.
  int extra = -1;

  friend bool operator==(const SeqEntry&, const SeqEntry&) = default;
};

using MultiplicitySeq = std::vector<SeqEntry>;

/// Points to blow up for the minimal embedded resolution of the branch.
MultiplicitySeq multiplicity_sequence(const CharExponents& c);

/// The sequence continued by free points of multiplicity 1 (the branch's
/// smooth strict transform keeps passing through them) up to `length`.
MultiplicitySeq extended_sequence(const CharExponents& c, int length);

/// Proximity structure forced by a list of multiplicities along a branch:
/// each point is proximate to the run of points following it whose
/// multiplicities add up to its own. Throws InvariantError when the list
/// admits no such structure.
MultiplicitySeq sequence_from_multiplicities(const std::vector<long long>& m);

/// Minimal generators of the semigroup of the branch.
std::vector<long long> semigroup(const CharExponents& c);

/// Noether's formula over the first `shared` common points. Throws
/// InputError when shared < 1 or the two branches cannot share that many
/// points (their proximity structures differ on the prefix).
long long branch_intersection(const CharExponents& a, const CharExponents& b, int shared);

/// Number of places where a run of satellite points ends (a free point or
/// the end of the sequence follows a satellite).
int satellite_runs(const MultiplicitySeq& s);

}  // namespace jumpnum
