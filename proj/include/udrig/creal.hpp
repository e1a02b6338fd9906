#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "udrig/interval.hpp"
#include "udrig/tower.hpp"

namespace udrig {

inline constexpr int kDefaultPrecision = 256;

enum class Ordering { Less, Equal, Greater, Undecided };

std::string to_string(Ordering o);

/// A certified real: a rational enclosure that can be refined on demand,
/// optionally backed by an exact quadratic-tower value.
///
/// Comparisons are three-valued. Equal is only ever reported when both sides
/// are exact and their normal forms coincide; Less/Greater when the
/// enclosures separate within the precision budget; Undecided otherwise.
class CReal {
 public:
  /// Enclosure of the value with roughly `bits` bits after the binary point.
  using Approximation = std::function<Interval(int bits)>;

  CReal();
  CReal(long value);  // NOLINT(google-explicit-constructor)
  CReal(const Rational& value);  // NOLINT(google-explicit-constructor)
  CReal(const TowerElem& value, int budget = kDefaultPrecision);  // NOLINT(google-explicit-constructor)

  /// A value known only through its enclosures (no exact expression).
  static CReal from_approximation(Approximation approx, int budget = kDefaultPrecision);

  static CReal parse(std::string_view text, int budget = kDefaultPrecision);

  const Interval& interval() const { return interval_; }

  /// Enclosure refined with `bits` of working precision, intersected with the
  /// current one so it never widens.
  CReal refined(int bits) const;

  bool is_exact() const { return exact_.has_value(); }
  const std::optional<TowerElem>& expr() const { return exact_; }
  /// Throws std::logic_error if the value has no exact expression.
  const TowerElem& exact() const;

  int budget() const { return budget_; }
  CReal with_budget(int bits) const;

  double approx() const;

  /// Exact expression string, or "~[lo, hi]" for enclosure-only values.
  std::string to_string() const;

  friend CReal operator+(const CReal& a, const CReal& b);
  friend CReal operator-(const CReal& a, const CReal& b);
  friend CReal operator-(const CReal& a);
  friend CReal operator*(const CReal& a, const CReal& b);
  friend CReal operator/(const CReal& a, const CReal& b);

  friend CReal sqrt(const CReal& x);
  friend CReal abs(const CReal& x);

 private:
  Interval enclosure(int bits) const;

  std::optional<TowerElem> exact_;
  std::shared_ptr<const Approximation> approx_;
  int budget_ = kDefaultPrecision;
  Interval interval_;
};

/// Three-valued comparison using the smaller of the two budgets.
Ordering compare(const CReal& a, const CReal& b);
Ordering compare(const CReal& a, const CReal& b, int budget);

}  // namespace udrig
