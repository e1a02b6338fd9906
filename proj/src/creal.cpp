#include "udrig/creal.hpp"

#include <algorithm>
#include <stdexcept>

namespace udrig {

namespace {

constexpr int kInitialBits = 64;
constexpr int kGuardBits = 4;

}  // namespace

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Less:
      return "less";
    case Ordering::Equal:
      return "equal";
    case Ordering::Greater:
      return "greater";
    case Ordering::Undecided:
      return "undecided";
  }
  return "undecided";
}

CReal::CReal() : CReal(TowerElem()) {}
CReal::CReal(long value) : CReal(TowerElem(value)) {}
CReal::CReal(const Rational& value) : CReal(TowerElem(value)) {}

CReal::CReal(const TowerElem& value, int budget)
    : exact_(value), budget_(budget), interval_(value.enclose(kInitialBits)) {}

CReal CReal::from_approximation(Approximation approx, int budget) {
  CReal out;
  out.exact_.reset();
  out.approx_ = std::make_shared<const Approximation>(std::move(approx));
  out.budget_ = budget;
  out.interval_ = (*out.approx_)(kInitialBits);
  return out;
}

CReal CReal::parse(std::string_view text, int budget) { return CReal(TowerElem::parse(text), budget); }

Interval CReal::enclosure(int bits) const {
  Interval fresh = exact_ ? exact_->enclose(bits) : (*approx_)(bits);
  return fresh.intersect(interval_);
}

CReal CReal::refined(int bits) const {
  CReal out = *this;
  out.interval_ = enclosure(bits);
  return out;
}

const TowerElem& CReal::exact() const {
  if (!exact_) throw std::logic_error("certified real has no exact expression");
  return *exact_;
}

CReal CReal::with_budget(int bits) const {
  CReal out = *this;
  out.budget_ = bits;
  return out;
}

double CReal::approx() const { return exact_ ? exact_->approx() : interval_.approx(); }

std::string CReal::to_string() const {
  if (exact_) return exact_->to_string();
  return "~[" + to_decimal(interval_.lo(), 20, false) + ", " + to_decimal(interval_.hi(), 20, true) + "]";
}

namespace {

template <typename Op>
CReal combine(const CReal& a, const CReal& b, Op op) {
  return CReal::from_approximation(
      [a, b, op](int bits) {
        int w = bits + kGuardBits;
        return op(a.refined(w).interval(), b.refined(w).interval()).rounded(w);
      },
      std::min(a.budget(), b.budget()));
}

}  // namespace

CReal operator+(const CReal& a, const CReal& b) {
  if (a.exact_ && b.exact_) return CReal(*a.exact_ + *b.exact_, std::min(a.budget_, b.budget_));
  return combine(a, b, [](const Interval& x, const Interval& y) { return x + y; });
}

CReal operator-(const CReal& a, const CReal& b) {
  if (a.exact_ && b.exact_) return CReal(*a.exact_ - *b.exact_, std::min(a.budget_, b.budget_));
  return combine(a, b, [](const Interval& x, const Interval& y) { return x - y; });
}

CReal operator-(const CReal& a) {
  if (a.exact_) return CReal(-*a.exact_, a.budget_);
  return CReal::from_approximation([a](int bits) { return -a.refined(bits).interval(); }, a.budget_);
}

CReal operator*(const CReal& a, const CReal& b) {
  if (a.exact_ && b.exact_) return CReal(*a.exact_ * *b.exact_, std::min(a.budget_, b.budget_));
  return combine(a, b, [](const Interval& x, const Interval& y) { return x * y; });
}

CReal operator/(const CReal& a, const CReal& b) {
  if (a.exact_ && b.exact_) return CReal(*a.exact_ / *b.exact_, std::min(a.budget_, b.budget_));
  return combine(a, b, [](const Interval& x, const Interval& y) { return x / y; });
}

CReal sqrt(const CReal& x) {
  if (x.exact_) return CReal(TowerElem::sqrt(*x.exact_), x.budget_);
  return CReal::from_approximation(
      [x](int bits) {
        int w = 2 * bits + kGuardBits;
        return x.refined(w).interval().sqrt(bits + kGuardBits);
      },
      x.budget_);
}

CReal abs(const CReal& x) {
  if (x.exact_) return CReal(x.exact_->abs(), x.budget_);
  return CReal::from_approximation([x](int bits) { return x.refined(bits).interval().abs(); }, x.budget_);
}

Ordering compare(const CReal& a, const CReal& b) { return compare(a, b, std::min(a.budget(), b.budget())); }

Ordering compare(const CReal& a, const CReal& b, int budget) {
  if (a.is_exact() && b.is_exact()) {
    TowerElem diff = a.exact() - b.exact();
    if (diff.is_zero()) return Ordering::Equal;
    auto s = diff.sign_within(budget);
    if (!s) return Ordering::Undecided;
    return *s < 0 ? Ordering::Less : Ordering::Greater;
  }
  for (int bits = kInitialBits;; bits *= 2) {
    int prec = std::min(bits, budget);
    const Interval ia = a.refined(prec).interval();
    const Interval ib = b.refined(prec).interval();
    if (ia.hi() < ib.lo()) return Ordering::Less;
    if (ib.hi() < ia.lo()) return Ordering::Greater;
    if (prec >= budget) return Ordering::Undecided;
  }
}

}  // namespace udrig
