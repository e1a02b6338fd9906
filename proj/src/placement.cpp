#include "udrig/placement.hpp"

namespace udrig {

PlacementSolution::PlacementSolution(std::vector<std::string> labels, std::vector<std::vector<CReal>> coords,
                                     Provenance provenance)
    : labels_(std::move(labels)), coords_(std::move(coords)), provenance_(std::move(provenance)) {
  if (labels_.size() != coords_.size()) throw PreconditionError("placement: label/coordinate count mismatch");
}

const std::vector<CReal>& PlacementSolution::at(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return coords_[i];
  }
  throw PreconditionError("placement: unknown label '" + std::string(label) + "'");
}

Point PlacementSolution::point(std::string_view label) const { return Point{std::string(label), at(label)}; }

PlacementSolution PlacementSolution::with_provenance(Provenance p) const {
  PlacementSolution out = *this;
  out.provenance_ = std::move(p);
  return out;
}

PlacementSolution placement_of(const Configuration& c) {
  std::vector<std::string> labels;
  std::vector<std::vector<CReal>> coords;
  for (const Point& p : c.points()) {
    labels.push_back(p.label);
    coords.push_back(p.coords);
  }
  return PlacementSolution(std::move(labels), std::move(coords), ExactProvenance{});
}

bool same_positions(const PlacementSolution& a, const PlacementSolution& b) {
  if (a.labels() != b.labels()) return false;
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    const auto& ca = a.coords()[i];
    const auto& cb = b.coords()[i];
    if (ca.size() != cb.size()) return false;
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (compare(ca[k], cb[k]) != Ordering::Equal) return false;
    }
  }
  return true;
}

PlacementSolution canonical_frame(const PlacementSolution& s, std::string_view base_first,
                                  std::string_view base_second) {
  const auto& o = s.at(base_first);
  const auto& b = s.at(base_second);
  if (o.size() != 2) throw PreconditionError("canonical_frame: planar placements only");
  const CReal zero(0L);
  CReal ex = b[0] - o[0];
  CReal ey = b[1] - o[1];
  CReal len2 = ex * ex + ey * ey;
  Ordering base_cmp = compare(len2, zero);
  if (base_cmp == Ordering::Equal) throw PreconditionError("canonical_frame: coincident base images");
  if (base_cmp == Ordering::Undecided) throw PreconditionError("canonical_frame: base separation undecided");

  // Rotation by the base direction; skip the square root when the base is
  // already on the positive first axis.
  CReal cs;
  CReal sn;
  if (compare(ey, zero) == Ordering::Equal && compare(ex, zero) == Ordering::Greater) {
    cs = CReal(1L);
    sn = zero;
  } else {
    CReal len = sqrt(len2);
    cs = ex / len;
    sn = ey / len;
  }
  bool rotate = !(cs.is_exact() && sn.is_exact() && cs.exact() == TowerElem(1L) && sn.exact().is_zero());

  std::vector<std::vector<CReal>> out;
  out.reserve(s.coords().size());
  for (const auto& p : s.coords()) {
    CReal vx = p[0] - o[0];
    CReal vy = p[1] - o[1];
    if (rotate) {
      out.push_back({cs * vx + sn * vy, cs * vy - sn * vx});
    } else {
      out.push_back({vx, vy});
    }
  }
  for (auto& p : out) {
    Ordering side = compare(p[1], zero);
    if (side == Ordering::Equal) continue;
    if (side == Ordering::Undecided) throw PreconditionError("canonical_frame: side of the first axis undecided");
    if (side == Ordering::Less) {
      for (auto& q : out) q[1] = -q[1];
    }
    break;
  }
  return PlacementSolution(s.labels(), std::move(out), s.provenance());
}

}  // namespace udrig
