#pragma once

#include "udrig/combinator.hpp"

namespace testing {

/// Kit builder for the two distances occurring in a rhombus: a unit pair is
/// its own kit, and a pair at distance sqrt(3) gets a Moser spindle whose
/// long diagonal is that pair. Every kit is verified before it is returned.
inline udrig::TBuilder spindle_tbuilder() {
  using namespace udrig;
  return [](const Configuration& source, const std::string& p, const std::string& q, const CReal& eps) {
    Configuration base = induced(source, {p, q});
    Vec2 pp = exact_vec2(base.point(p).coords);
    Vec2 qq = exact_vec2(base.point(q).coords);
    std::vector<Configuration> candidates;
    TowerElem d2 = norm2(pp - qq);
    if (d2 == TowerElem(1L)) candidates.push_back(base);
    if (d2 == TowerElem(3L)) {
      for (const Vec2& b : intersect_unit_circles(pp, qq).points) {
        Configuration c = base;
        std::string label = c.fresh_label("H");
        c.add_point({label, to_coords(b)});
        c.add_edge(p, label);
        c.add_edge(label, q);
        candidates.push_back(build_spindle(c, p, label, TowerElem(Rational(5, 6)), "H"));
      }
    }
    for (const Configuration& kit : candidates) {
      if (verify(kit, EpsilonClaim{p, q, eps}).outcome == Outcome::Proven) return kit;
    }
    throw KitFailure("no spindle kit for {" + p + "," + q + "}");
  };
}

}  // namespace testing
