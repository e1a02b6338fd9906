#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "udrig/interval.hpp"

namespace udrig {

/// An exact element of the real quadratic tower
///
///   Q = F_0 < F_1 = F_0(s_1) < F_2 = F_1(s_2) < ...
///
/// where every generator s_k is the positive square root of a positive
/// element of F_{k-1} that is not already a square there. The chain is
/// process-wide and grows on demand: taking the square root of a value
/// first searches the current top field for an existing root and only
/// adjoins a new generator when none exists. Consequently every element has
/// a unique representation a + b*s_k (a, b in F_{k-1}, b != 0) and equality
/// is structural.
///
/// Values are immutable and can be shared between threads. Adjoining is
/// serialized internally; the numbering of generators depends on the order
/// in which square roots are first requested, so printed forms are stable
/// for a deterministic sequence of operations.
class TowerElem {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  TowerElem();
  TowerElem(long value);  // NOLINT(google-explicit-constructor)
  TowerElem(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Positive square root; throws std::domain_error for negative input.
  static TowerElem sqrt(const TowerElem& x);

  /// The nonnegative root if x is a square in the current tower, without
  /// adjoining anything.
  static std::optional<TowerElem> sqrt_if_square(const TowerElem& x);

  /// Parses the expression grammar: integers, decimals, '+', '-', '*', '/',
  /// 'sqrt(...)', parentheses. Throws std::invalid_argument on bad input.
  static TowerElem parse(std::string_view text);

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::logic_error if not rational.
  const Rational& rational() const;

  /// Index of the highest generator in the representation (0 for rationals).
  int level() const;

  /// Exact sign. Nonzero elements are separated from zero by refining
  /// enclosures without bound.
  int sign() const;
  /// Sign if it can be certified with at most `bits` of working precision.
  std::optional<int> sign_within(int bits) const;

  Interval enclose(int bits) const;
  double approx() const;

  /// Canonical expression string; parse(to_string()) == *this.
  std::string to_string() const;

  std::size_t hash() const;

  TowerElem abs() const;

  friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator-(const TowerElem& a);
  friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
  /// Throws std::domain_error on division by zero.
  friend TowerElem operator/(const TowerElem& a, const TowerElem& b);
  friend bool operator==(const TowerElem& a, const TowerElem& b);
  friend bool operator!=(const TowerElem& a, const TowerElem& b) { return !(a == b); }

  TowerElem& operator+=(const TowerElem& o) { return *this = *this + o; }
  TowerElem& operator-=(const TowerElem& o) { return *this = *this - o; }
  TowerElem& operator*=(const TowerElem& o) { return *this = *this * o; }

 private:
  explicit TowerElem(NodePtr node) : node_(std::move(node)) {}
  NodePtr node_;

  friend struct TowerAccess;
};

/// Exact three-way comparison (always decidable).
int compare_exact(const TowerElem& a, const TowerElem& b);

/// Exact integer floor / ceiling.
Integer floor(const TowerElem& x);
Integer ceil(const TowerElem& x);

namespace tower {

/// Number of generators adjoined so far in this process.
int height();

/// Radicand of generator k (1-based).
TowerElem radicand(int k);

/// The generator s_k itself.
TowerElem generator(int k);

}  // namespace tower

}  // namespace udrig
