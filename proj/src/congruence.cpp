#include "udrig/congruence.hpp"

#include <cmath>

namespace udrig {

void TruncationQuery::validate() const {
  if (N < 1) throw PreconditionError("truncation depth N must be at least 1");
  if (denominator_bound < 1) throw PreconditionError("denominator bound must be at least 1");
  for (const Point* p : {&a, &b, &c, &d}) {
    if (p->coords.size() != 2) throw PreconditionError("point '" + p->label + "' is not planar");
    for (const CReal& v : p->coords) {
      if (!v.is_exact()) throw PreconditionError("point '" + p->label + "' has inexact coordinates");
    }
  }
}

namespace {

TowerElem tmax(const TowerElem& a, const TowerElem& b) { return compare_exact(a, b) >= 0 ? a : b; }
TowerElem tmin(const TowerElem& a, const TowerElem& b) { return compare_exact(a, b) <= 0 ? a : b; }

TowerElem exact_distance(const Point& p, const Point& q) { return TowerElem::sqrt(norm2(exact_vec2(p.coords) - exact_vec2(q.coords))); }

// Simplest rational in [lo, hi] with 0 < lo <= hi.
std::optional<Rational> simplest_positive(const TowerElem& lo, const TowerElem& hi) {
  Integer k = ceil(lo);
  if (compare_exact(TowerElem(Rational(k)), hi) <= 0) return Rational(k);
  if (lo == hi) return lo.is_rational() ? std::optional<Rational>(lo.rational()) : std::nullopt;
  // Both endpoints lie strictly between fl and fl + 1.
  Integer fl = floor(lo);
  TowerElem f{Rational(fl)};
  TowerElem one(1L);
  auto inner = simplest_positive(one / (hi - f), one / (lo - f));
  if (!inner) return std::nullopt;
  Rational r = Rational(fl) + 1 / *inner;
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<Rational> simplest_rational(const TowerElem& lo, const TowerElem& hi) {
  if (compare_exact(lo, hi) > 0 || hi.sign() <= 0) return std::nullopt;
  if (lo.sign() <= 0) {
    // (0, hi]: 1/m with m the least integer such that 1/m <= hi.
    Integer m = ceil(TowerElem(1L) / hi);
    return Rational(1, 1) / Rational(m);
  }
  return simplest_positive(lo, hi);
}

std::optional<std::pair<TowerElem, TowerElem>> feasible_interval(const TowerElem& d1, const TowerElem& d2, int n) {
  TowerElem inv(Rational(1, n));
  TowerElem lo = tmax((d1 - inv).abs(), (d2 - inv).abs());
  TowerElem hi = tmin(d1 + inv, d2 + inv);
  if (compare_exact(lo, hi) > 0) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::optional<TruncationWitness> construct_witness(const TruncationQuery& q, const Rational& r, int n) {
  TowerElem rr(r);
  TowerElem inv(Rational(1, n));
  auto point_on = [&](const Point& center, const Point& other) -> std::optional<Vec2> {
    Vec2 p = exact_vec2(center.coords);
    Vec2 o = exact_vec2(other.coords);
    CircleIntersection hit = intersect_circles(p, rr, o, inv);
    Vec2 x;
    if (hit.kind == IntersectionKind::Continuum) {
      x = p + Vec2{rr, TowerElem(0L)};
    } else if (!hit.points.empty()) {
      x = hit.points[0];
    } else {
      return std::nullopt;
    }
    if (norm2(x - p) != rr * rr || norm2(x - o) != inv * inv) return std::nullopt;
    return x;
  };
  auto x = point_on(q.a, q.b);
  auto y = point_on(q.c, q.d);
  if (!x || !y) return std::nullopt;
  return TruncationWitness{r, *x, *y};
}

namespace {

void closed_form_level(const TowerElem& d1, const TowerElem& d2, LevelResult& lv) {
  lv.feasible = feasible_interval(d1, d2, lv.n);
  if (lv.feasible) lv.simplest = simplest_rational(lv.feasible->first, lv.feasible->second);
  lv.closed_form = lv.simplest.has_value();
}

void search_level(const TruncationQuery& q, const TowerElem& d1, const TowerElem& d2, LevelResult& lv) {
  auto iv = feasible_interval(d1, d2, lv.n);
  lv.search = false;
  if (iv) {
    const TowerElem& lo = iv->first;
    const TowerElem& hi = iv->second;
    double lo_d = lo.approx();
    double hi_d = hi.approx();
    for (long den = 1; den <= q.denominator_bound && !lv.search; ++den) {
      long p0 = std::max(1L, static_cast<long>(std::floor(lo_d * den)) - 1);
      long p1 = static_cast<long>(std::ceil(hi_d * den)) + 1;
      for (long num = p0; num <= p1; ++num) {
        Rational r(num, den);
        r.canonicalize();
        if (r.get_den() != den) continue;  // seen with a smaller denominator
        TowerElem t(r);
        if (compare_exact(t, lo) < 0 || compare_exact(t, hi) > 0) continue;
        if (auto w = construct_witness(q, r, lv.n)) {
          lv.witness = std::move(w);
          lv.search = true;
          break;
        }
      }
    }
  }
}

TruncationResult run(const TruncationQuery& q, bool closed, bool search) {
  q.validate();
  TowerElem d1 = exact_distance(q.a, q.b);
  TowerElem d2 = exact_distance(q.c, q.d);
  TruncationResult out;
  out.closed_form = true;
  out.search = true;
  for (int n = 1; n <= q.N; ++n) {
    LevelResult lv;
    lv.n = n;
    if (closed) closed_form_level(d1, d2, lv);
    if (search) search_level(q, d1, d2, lv);
    if (closed && search) lv.false_by_search = lv.closed_form && !lv.search;
    if (closed && !lv.closed_form && !out.first_failure) out.first_failure = n;
    out.closed_form = out.closed_form && lv.closed_form;
    out.search = out.search && lv.search;
    out.levels.push_back(std::move(lv));
  }
  if (!closed) out.closed_form = false;
  if (!search) out.search = false;
  return out;
}

}  // namespace

TruncationResult truncated_equiv_closed_form(const TruncationQuery& q) { return run(q, true, false); }

TruncationResult truncated_equiv_search(const TruncationQuery& q) {
  TruncationResult r = run(q, true, true);
  for (LevelResult& lv : r.levels) lv.closed_form = false;
  r.closed_form = false;
  r.first_failure.reset();
  return r;
}

TruncationResult truncated_equiv(const TruncationQuery& q) { return run(q, true, true); }

}  // namespace udrig
