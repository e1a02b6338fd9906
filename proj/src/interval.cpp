#include "udrig/interval.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace udrig {

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite double");
  Rational r;
  mpq_set_d(r.get_mpq_t(), v);
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits, bool round_up) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = q * Rational(scale);
  Integer n = round_up ? ceil(scaled) : floor(scaled);
  bool negative = n < 0;
  if (negative) n = -n;
  std::string s = n.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative) s.insert(0, "-");
  return s;
}

namespace {

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = std::hash<long>{}(mpz_sgn(z));
  std::size_t n = mpz_size(z);
  h ^= n + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  for (std::size_t i = 0; i < n && i < 4; ++i) {
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

std::size_t hash_value(const Rational& q) {
  std::size_t h = hash_mpz(q.get_num_mpz_t());
  return h * 31 + hash_mpz(q.get_den_mpz_t());
}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("interval lower bound exceeds upper bound");
}

Interval Interval::rounded(int bits) const {
  Rational scale = pow2(bits);
  Interval out;
  out.lo_ = Rational(floor(lo_ * scale)) / scale;
  out.hi_ = Rational(ceil(hi_ * scale)) / scale;
  return out;
}

Interval Interval::intersect(const Interval& other) const {
  Interval out;
  out.lo_ = std::max(lo_, other.lo_);
  out.hi_ = std::min(hi_, other.hi_);
  if (out.lo_ > out.hi_) return *this;
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out;
  out.lo_ = a.lo_ + b.lo_;
  out.hi_ = a.hi_ + b.hi_;
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out;
  out.lo_ = a.lo_ - b.hi_;
  out.hi_ = a.hi_ - b.lo_;
  return out;
}

Interval operator-(const Interval& a) {
  Interval out;
  out.lo_ = -a.hi_;
  out.hi_ = -a.lo_;
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo_ * b.lo_;
  Rational p2 = a.lo_ * b.hi_;
  Rational p3 = a.hi_ * b.lo_;
  Rational p4 = a.hi_ * b.hi_;
  Interval out;
  out.lo_ = std::min({p1, p2, p3, p4});
  out.hi_ = std::max({p1, p2, p3, p4});
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  Interval inv;
  inv.lo_ = 1 / b.hi_;
  inv.hi_ = 1 / b.lo_;
  return a * inv;
}

Interval Interval::abs() const {
  if (lo_ >= 0) return *this;
  if (hi_ <= 0) return -*this;
  Interval out;
  out.lo_ = 0;
  out.hi_ = std::max(Rational(-lo_), hi_);
  return out;
}

namespace {

// floor(sqrt(q * 4^bits)) / 2^bits and the matching ceiling.
Rational sqrt_bound(const Rational& q, int bits, bool up) {
  if (q <= 0) return Rational(0);
  Rational scaled = q * pow2(2L * bits);
  Integer n = up ? ceil(scaled) : floor(scaled);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  if (up && root * root != n) root += 1;
  return Rational(root) / pow2(bits);
}

}  // namespace

Interval Interval::sqrt(int bits) const {
  Interval out;
  out.lo_ = sqrt_bound(lo_, bits, false);
  out.hi_ = sqrt_bound(hi_, bits, true);
  return out;
}

double Interval::approx() const { return midpoint().get_d(); }

}  // namespace udrig
