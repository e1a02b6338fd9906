#include "udrig/combinator.hpp"

namespace udrig {

std::string to_string(KitKind k) { return k == KitKind::Distinctness ? "distinctness" : "non-unit"; }

TBuilder default_tbuilder(SearchBudget budget, int precision) {
  return [budget, precision](const Configuration& source, const std::string& p, const std::string& q,
                             const CReal& eps) {
    Configuration pair = induced(source, {p, q});
    try {
      return build_epsilon_witness(pair, p, q, eps, budget, precision).config;
    } catch (const NoVerifiedConstruction&) {
    }
    try {
      return build_epsilon_witness(source, p, q, eps, budget, precision).config;
    } catch (const NoVerifiedConstruction& e) {
      throw KitFailure(e.what());
    }
  };
}

namespace {

Configuration checked_kit(const Configuration& source, const std::string& p, const std::string& q, const CReal& eps,
                          const TBuilder& t) {
  Configuration kit = t(source, p, q, eps);
  for (const std::string& l : {p, q}) {
    if (!kit.contains(l)) throw KitFailure("kit for {" + p + "," + q + "} lacks '" + l + "'");
    const auto& want = source.point(l).coords;
    const auto& got = kit.point(l).coords;
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (!want[i].is_exact() || !got[i].is_exact() || want[i].exact() != got[i].exact()) {
        throw KitFailure("kit for {" + p + "," + q + "} moved '" + l + "'");
      }
    }
  }
  return kit;
}

CReal half_distance(const Configuration& c, const std::string& p, const std::string& q) {
  return distance(c.point(p), c.point(q)) / CReal(2L);
}

CReal half_gap(const Configuration& c, const std::string& p, const std::string& q) {
  return abs(distance(c.point(p), c.point(q)) - CReal(1L)) / CReal(2L);
}

bool same_coords(const Point& a, const Point& b) {
  if (a.coords.size() != b.coords.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (!a.coords[i].is_exact() || !b.coords[i].is_exact() || a.coords[i].exact() != b.coords[i].exact()) {
      return false;
    }
  }
  return true;
}

Strengthened strengthen(const Configuration& s, const std::vector<std::string>& labels, const TBuilder& t,
                        int precision) {
  for (const std::string& l : labels) s.point(l);
  require_valid(s, precision);
  Configuration classified = classify_pairs(s, precision);
  Strengthened out{s, {}};
  const auto& pts = s.points();
  std::vector<std::pair<KitKind, LabelPair>> census;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) census.emplace_back(KitKind::Distinctness, LabelPair{pts[i].label, pts[j].label});
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      PairClass cls = classified.pair_table().at(LabelPair::of(pts[i].label, pts[j].label));
      if (cls == PairClass::Undecided) {
        throw PreconditionError("pair {" + pts[i].label + "," + pts[j].label + "} is undecided");
      }
      if (cls == PairClass::NonUnit) census.emplace_back(KitKind::NonUnit, LabelPair{pts[i].label, pts[j].label});
    }
  }
  for (const auto& [kind, pair] : census) {
    Configuration kit = kind == KitKind::Distinctness ? distinctness_kit(s, pair.first, pair.second, t, precision)
                                                      : non_unit_kit(s, pair.first, pair.second, t, precision);
    auto [merged, added] = merge_kit(out.config, kit);
    CReal eps = kind == KitKind::Distinctness ? half_distance(s, pair.first, pair.second)
                                              : half_gap(s, pair.first, pair.second);
    out.kits.push_back(KitRecord{kind, pair, eps, kit.size(), added});
    out.config = std::move(merged);
  }
  Configuration final_pairs = classify_pairs(out.config, precision);
  for (const auto& [pair, cls] : final_pairs.pair_table()) {
    if (cls == PairClass::Undecided) throw PreconditionError("merged pair " + to_string(pair) + " is undecided");
    if (cls == PairClass::Unit && !out.config.has_edge(pair.first, pair.second)) {
      out.config.add_edge(pair.first, pair.second);
    }
  }
  return out;
}

}  // namespace

Configuration distinctness_kit(const Configuration& source, const std::string& p, const std::string& q,
                               const TBuilder& t, int precision) {
  if (p == q || compare(distance(source.point(p), source.point(q)), CReal(0L), precision) != Ordering::Greater) {
    throw PreconditionError("distinctness_kit: '" + p + "' and '" + q + "' must be distinct points");
  }
  return checked_kit(source, p, q, half_distance(source, p, q), t);
}

Configuration non_unit_kit(const Configuration& source, const std::string& p, const std::string& q, const TBuilder& t,
                           int precision) {
  Ordering o = compare(distance(source.point(p), source.point(q)), CReal(1L), precision);
  if (o == Ordering::Equal || o == Ordering::Undecided) {
    throw PreconditionError("non_unit_kit: d(" + p + "," + q + ") != 1 is not certified");
  }
  return checked_kit(source, p, q, half_gap(source, p, q), t);
}

std::pair<Configuration, std::size_t> merge_kit(const Configuration& base, const Configuration& kit) {
  if (base.dimension() != kit.dimension()) throw PreconditionError("merge_kit: dimension mismatch");
  Configuration out = base;
  std::map<std::string, std::string> rename;
  std::size_t added = 0;
  for (const Point& p : kit.points()) {
    std::optional<std::string> same;
    for (const Point& q : out.points()) {
      if (same_coords(p, q)) {
        same = q.label;
        break;
      }
    }
    if (same) {
      rename[p.label] = *same;
      continue;
    }
    std::string label = out.contains(p.label) ? out.fresh_label(p.label) : p.label;
    out.add_point(Point{label, p.coords});
    rename[p.label] = label;
    ++added;
  }
  for (const LabelPair& e : kit.unit_edges()) {
    const std::string& a = rename.at(e.first);
    const std::string& b = rename.at(e.second);
    if (a != b && !out.has_edge(a, b)) out.add_edge(a, b);
  }
  return {std::move(out), added};
}

Strengthened strengthen_star(const Configuration& s, const std::string& x, const std::string& y, const TBuilder& t,
                             int precision) {
  return strengthen(s, {x, y}, t, precision);
}

Strengthened strengthen_diamond(const Configuration& c, const std::string& k, const std::string& l,
                                const std::string& m, const std::string& n, const TBuilder& t, int precision) {
  return strengthen(c, {k, l, m, n}, t, precision);
}

}  // namespace udrig
