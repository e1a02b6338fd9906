#pragma once

#include <optional>
#include <vector>

#include "udrig/configuration.hpp"
#include "udrig/plane.hpp"

namespace udrig {

/// Levels n = 1..N of: exists a positive rational r and points x, y with
/// d(a,x) = r, d(c,y) = r, d(b,x) = 1/n, d(d,y) = 1/n.
struct TruncationQuery {
  Point a, b, c, d;
  int N = 1;
  long denominator_bound = 64;

  /// Throws PreconditionError unless N >= 1, denominator_bound >= 1 and all
  /// four points are planar and exact.
  void validate() const;
};

/// r with its two witness points.
struct TruncationWitness {
  Rational r;
  Vec2 x;
  Vec2 y;
};

struct LevelResult {
  int n = 0;
  bool closed_form = false;
  /// Closed interval of feasible r (before the rationality test).
  std::optional<std::pair<TowerElem, TowerElem>> feasible;
  std::optional<Rational> simplest;  // smallest-denominator r, when one exists
  bool search = false;
  bool false_by_search = false;      // search failed where closed form holds
  std::optional<TruncationWitness> witness;  // from the search
};

struct TruncationResult {
  std::vector<LevelResult> levels;
  bool closed_form = false;  // every level
  bool search = false;
  /// First failing level under the closed form.
  std::optional<int> first_failure;
};

/// Smallest-denominator rational in [lo, hi] (smallest value among those),
/// restricted to r > 0. Empty when the interval holds no positive rational.
std::optional<Rational> simplest_rational(const TowerElem& lo, const TowerElem& hi);

/// Feasible r at level n: [|D1 - 1/n|, D1 + 1/n] intersected with
/// [|D2 - 1/n|, D2 + 1/n], empty when they are disjoint.
std::optional<std::pair<TowerElem, TowerElem>> feasible_interval(const TowerElem& d1, const TowerElem& d2, int n);

/// Witness points for a feasible r at level n (checked exactly).
std::optional<TruncationWitness> construct_witness(const TruncationQuery& q, const Rational& r, int n);

TruncationResult truncated_equiv_closed_form(const TruncationQuery& q);
TruncationResult truncated_equiv_search(const TruncationQuery& q);

/// Both modes, level by level.
TruncationResult truncated_equiv(const TruncationQuery& q);

}  // namespace udrig
