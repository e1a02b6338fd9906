#include "udrig/plane.hpp"

#include "udrig/errors.hpp"

namespace udrig {

Vec2 exact_vec2(const std::vector<CReal>& coords) {
  if (coords.size() != 2) throw PreconditionError("expected planar coordinates");
  if (!coords[0].is_exact() || !coords[1].is_exact()) throw PreconditionError("expected exact coordinates");
  return {coords[0].exact(), coords[1].exact()};
}

std::vector<CReal> to_coords(const Vec2& v) { return {CReal(v.x), CReal(v.y)}; }

CircleIntersection intersect_circles(const Vec2& p, const TowerElem& rp, const Vec2& q, const TowerElem& rq,
                                     int budget) {
  CircleIntersection out;
  Vec2 w = q - p;
  TowerElem d2 = norm2(w);
  if (d2.is_zero()) {
    out.kind = rp == rq ? IntersectionKind::Continuum : IntersectionKind::None;
    return out;
  }
  TowerElem rp2 = rp * rp;
  TowerElem a = (rp2 - rq * rq + d2) / (TowerElem(2L) * d2);
  TowerElem t2 = rp2 / d2 - a * a;
  Vec2 foot = p + a * w;
  if (t2.is_zero()) {
    out.kind = IntersectionKind::Tangent;
    out.points.push_back(foot);
    return out;
  }
  auto s = t2.sign_within(budget);
  if (!s) {
    out.kind = IntersectionKind::Undecided;
    return out;
  }
  if (*s < 0) return out;
  TowerElem t = TowerElem::sqrt(t2);
  Vec2 offset = t * perp(w);
  out.kind = IntersectionKind::Two;
  out.points.push_back(foot + offset);
  out.points.push_back(foot - offset);
  return out;
}

}  // namespace udrig
