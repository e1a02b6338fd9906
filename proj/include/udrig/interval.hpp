#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace udrig {

using Integer = mpz_class;
using Rational = mpq_class;

/// 2^e as a rational (e may be negative).
Rational pow2(long e);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Exact rational value of a finite double.
Rational rational_from_double(double v);

/// "p" or "p/q", canonical (q > 0, gcd 1).
std::string to_string(const Rational& q);

/// Decimal rendering with `digits` fractional digits, rounded toward -inf
/// (`round_up == false`) or +inf.
std::string to_decimal(const Rational& q, int digits, bool round_up);

std::size_t hash_value(const Rational& q);

/// Closed interval with rational endpoints. Every operation rounds outward,
/// so the true result is always enclosed.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& point) : lo_(point), hi_(point) {}
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
  bool strictly_positive() const { return lo_ > 0; }
  bool strictly_negative() const { return hi_ < 0; }

  /// Snap endpoints outward onto the dyadic grid 2^-bits.
  Interval rounded(int bits) const;

  /// Intersection; if disjoint (cannot happen for two enclosures of the same
  /// real) the receiver is returned unchanged.
  Interval intersect(const Interval& other) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Requires 0 outside `b`; throws std::domain_error otherwise.
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval abs() const;

  /// Enclosure of sqrt over the nonnegative part, at absolute precision 2^-bits.
  Interval sqrt(int bits) const;

  double approx() const;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

}  // namespace udrig
