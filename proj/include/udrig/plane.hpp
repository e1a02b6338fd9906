#pragma once

#include <vector>

#include "udrig/creal.hpp"
#include "udrig/tower.hpp"

namespace udrig {

/// Exact planar vector over the quadratic tower.
struct Vec2 {
  TowerElem x;
  TowerElem y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const TowerElem& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

inline TowerElem norm2(const Vec2& v) { return v.x * v.x + v.y * v.y; }
/// Counter-clockwise quarter turn.
inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

/// Throws PreconditionError unless both coordinates are exact.
Vec2 exact_vec2(const std::vector<CReal>& coords);
std::vector<CReal> to_coords(const Vec2& v);

enum class IntersectionKind { None, Tangent, Two, Continuum, Undecided };

struct CircleIntersection {
  IntersectionKind kind = IntersectionKind::None;
  /// Two points: the one left of p->q first. Tangent: the single point.
  std::vector<Vec2> points;
};

/// Intersection of the circles |x-p| = rp and |x-q| = rq. Writing w = q - p
/// and D = |w|, the points are p + a w ± t perp(w) with
/// a = (rp^2 - rq^2 + D^2) / (2 D^2) and t^2 = rp^2 / D^2 - a^2.
CircleIntersection intersect_circles(const Vec2& p, const TowerElem& rp, const Vec2& q, const TowerElem& rq,
                                     int budget = kDefaultPrecision);

inline CircleIntersection intersect_unit_circles(const Vec2& p, const Vec2& q, int budget = kDefaultPrecision) {
  return intersect_circles(p, TowerElem(1L), q, TowerElem(1L), budget);
}

}  // namespace udrig
