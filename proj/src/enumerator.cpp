#include "udrig/enumerator.hpp"

#include <algorithm>
#include <unordered_map>

#include "udrig/plane.hpp"

namespace udrig {

std::string to_string(EnumerationError::Kind k) {
  switch (k) {
    case EnumerationError::Kind::NoTrilaterationOrder:
      return "no-trilateration-order";
    case EnumerationError::Kind::ContinuumBranch:
      return "continuum-branch";
    case EnumerationError::Kind::PrecisionExhausted:
      return "precision-exhausted";
    case EnumerationError::Kind::NotPlanar:
      return "not-planar";
  }
  return "unknown";
}

namespace {

std::optional<std::vector<TowerElem>> derived_distances(const Configuration& c, const std::string& w,
                                                        const std::string& u, const std::vector<int>& placed_at) {
  std::vector<std::string> keep{w};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (placed_at[i] < 0) keep.push_back(c.points()[i].label);
  }
  Configuration sub = induced(c, keep);
  if (sub.neighbors(w).empty()) return std::nullopt;
  Spectrum s = spectrum(sub, w, u);
  if (!s.complete || s.values.empty()) return std::nullopt;
  std::vector<TowerElem> out;
  for (const CReal& v : s.values) {
    if (!v.is_exact()) return std::nullopt;
    out.push_back(v.exact());
  }
  return out;
}

}  // namespace

TrilaterationOrder find_order(const Configuration& c, const std::string& a, const std::string& b, bool derived) {
  if (!c.has_edge(a, b)) {
    throw PreconditionError("find_order: base {" + a + "," + b + "} is not a declared unit edge");
  }
  const std::size_t n = c.size();
  std::vector<int> placed_at(n, -1);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const LabelPair& e : c.unit_edges()) {
    std::size_t i = *c.index_of(e.first);
    std::size_t j = *c.index_of(e.second);
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  TrilaterationOrder order{a, b, {}, {}, {}};
  int step = 0;
  placed_at[*c.index_of(a)] = step++;
  placed_at[*c.index_of(b)] = step++;
  auto placed_neighbours = [&](std::size_t i) {
    std::vector<std::size_t> placed;
    for (std::size_t j : adj[i]) {
      if (placed_at[j] >= 0) placed.push_back(j);
    }
    std::sort(placed.begin(), placed.end(), [&](std::size_t x, std::size_t y) { return placed_at[x] < placed_at[y]; });
    return placed;
  };
  auto fail = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      if (placed_at[i] < 0) {
        throw EnumerationError(EnumerationError::Kind::NoTrilaterationOrder,
                               "no trilateration order from {" + a + "," + b + "}: '" + c.points()[i].label +
                                   "' never gains two placed unit neighbours");
      }
    }
  };
  for (std::size_t remaining = n - 2; remaining > 0; --remaining) {
    bool progressed = false;
    for (std::size_t i = 0; i < n && !progressed; ++i) {
      if (placed_at[i] >= 0) continue;
      auto placed = placed_neighbours(i);
      if (placed.size() < 2) continue;
      order.sequence.push_back(c.points()[i].label);
      order.supports.emplace_back(c.points()[placed[0]].label, c.points()[placed[1]].label);
      order.derived.emplace_back();
      placed_at[i] = step++;
      progressed = true;
    }
    if (!progressed && derived) {
      std::vector<std::size_t> by_step(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (placed_at[i] >= 0) by_step[placed_at[i]] = i;
      }
      for (std::size_t i = 0; i < n && !progressed; ++i) {
        if (placed_at[i] >= 0) continue;
        auto placed = placed_neighbours(i);
        if (placed.empty()) continue;
        for (int s = 0; s < step && !progressed; ++s) {
          std::size_t w = by_step[s];
          if (w == placed[0]) continue;
          auto values = derived_distances(c, c.points()[w].label, c.points()[i].label, placed_at);
          if (!values) continue;
          order.sequence.push_back(c.points()[i].label);
          order.supports.emplace_back(c.points()[w].label, c.points()[placed[0]].label);
          order.derived.push_back(std::move(*values));
          placed_at[i] = step++;
          progressed = true;
        }
      }
    }
    if (!progressed) fail();
  }
  return order;
}

std::optional<TrilaterationOrder> find_any_order(const Configuration& c) {
  for (bool derived : {false, true}) {
    for (const Point& p : c.points()) {
      for (const std::string& q : c.neighbors(p.label)) {
        if (*c.index_of(q) < *c.index_of(p.label)) continue;
        try {
          return find_order(c, p.label, q, derived);
        } catch (const EnumerationError&) {
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Search {
  const Configuration& c;
  const TrilaterationOrder& order;
  int budget;
  std::vector<std::size_t> seq_index;                          // point index per sequence entry
  std::vector<std::pair<std::size_t, std::size_t>> supports;   // point indices
  std::vector<std::vector<std::size_t>> checks;                // further placed neighbours per entry
  std::vector<std::optional<Vec2>> image;
  std::vector<int> path;
  Enumeration result;
  std::unordered_multimap<std::size_t, std::size_t> seen;

  void run(std::size_t k) {
    if (k == seq_index.size()) {
      leaf();
      return;
    }
    const std::vector<TowerElem>& radii = order.derived[k];
    if (radii.empty()) {
      branch(k, TowerElem(1L), 0);
    } else {
      for (std::size_t r = 0; r < radii.size(); ++r) branch(k, radii[r], static_cast<int>(2 * r));
    }
  }

  void branch(std::size_t k, const TowerElem& radius, int path_offset) {
    const Vec2& p = *image[supports[k].first];
    const Vec2& q = *image[supports[k].second];
    ++result.stats.nodes;
    CircleIntersection hit = intersect_circles(p, radius, q, TowerElem(1L), budget);
    const std::string& label = order.sequence[k];
    switch (hit.kind) {
      case IntersectionKind::Continuum:
        throw EnumerationError(EnumerationError::Kind::ContinuumBranch,
                               "supports of '" + label + "' coincide: its position is a full circle");
      case IntersectionKind::Undecided:
        throw EnumerationError(EnumerationError::Kind::PrecisionExhausted,
                               "feasibility of '" + label + "' undecided within " + std::to_string(budget) + " bits");
      case IntersectionKind::None:
        ++result.stats.infeasible;
        return;
      default:
        break;
    }
    for (std::size_t choice = 0; choice < hit.points.size(); ++choice) {
      const Vec2& x = hit.points[choice];
      bool ok = true;
      for (std::size_t j : checks[k]) {
        if (norm2(x - *image[j]) != TowerElem(1L)) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        ++result.stats.edge_rejections;
        continue;
      }
      image[seq_index[k]] = x;
      path.push_back(path_offset + static_cast<int>(choice));
      run(k + 1);
      path.pop_back();
      image[seq_index[k]].reset();
    }
  }

  void leaf() {
    ++result.stats.leaves;
    std::vector<Vec2> pts;
    pts.reserve(image.size());
    for (const auto& v : image) pts.push_back(*v);
    // The base already sits at (0,0), (1,0); only the reflection is left.
    for (const Vec2& v : pts) {
      if (v.y.is_zero()) continue;
      auto s = v.y.sign_within(budget);
      if (!s) {
        throw EnumerationError(EnumerationError::Kind::PrecisionExhausted, "framing reflection undecided");
      }
      if (*s < 0) {
        for (Vec2& w : pts) w.y = -w.y;
      }
      break;
    }
    std::size_t h = 0;
    for (const Vec2& v : pts) h = h * 1000003ULL ^ (v.x.hash() * 31 + v.y.hash());
    auto range = seen.equal_range(h);
    for (auto it = range.first; it != range.second; ++it) {
      const PlacementSolution& other = result.solutions[it->second];
      bool same = true;
      for (std::size_t i = 0; i < pts.size() && same; ++i) {
        same = other.coords()[i][0].exact() == pts[i].x && other.coords()[i][1].exact() == pts[i].y;
      }
      if (same) {
        ++result.stats.duplicates;
        return;
      }
    }
    std::vector<std::string> labels;
    std::vector<std::vector<CReal>> coords;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      labels.push_back(c.points()[i].label);
      coords.push_back(to_coords(pts[i]));
    }
    seen.emplace(h, result.solutions.size());
    result.solutions.emplace_back(std::move(labels), std::move(coords), ExactProvenance{path});
  }
};

}  // namespace

Enumeration enumerate(const Configuration& c, const TrilaterationOrder& order, int budget) {
  if (c.dimension() != 2) {
    throw EnumerationError(EnumerationError::Kind::NotPlanar, "exact enumeration is planar only");
  }
  Search s{c, order, budget, {}, {}, {}, std::vector<std::optional<Vec2>>(c.size()), {}, {}, {}};
  s.result.order = order;
  std::vector<bool> placed(c.size(), false);
  std::size_t a = *c.index_of(order.base_first);
  std::size_t b = *c.index_of(order.base_second);
  s.image[a] = Vec2{TowerElem(0L), TowerElem(0L)};
  s.image[b] = Vec2{TowerElem(1L), TowerElem(0L)};
  placed[a] = placed[b] = true;
  for (std::size_t k = 0; k < order.sequence.size(); ++k) {
    std::size_t i = *c.index_of(order.sequence[k]);
    std::size_t p = *c.index_of(order.supports[k].first);
    std::size_t q = *c.index_of(order.supports[k].second);
    s.seq_index.push_back(i);
    s.supports.emplace_back(p, q);
    std::vector<std::size_t> extra;
    for (const std::string& nb : c.neighbors(order.sequence[k])) {
      std::size_t j = *c.index_of(nb);
      if (placed[j] && j != p && j != q) extra.push_back(j);
    }
    s.checks.push_back(std::move(extra));
    placed[i] = true;
  }
  s.run(0);
  return std::move(s.result);
}

Enumeration enumerate(const Configuration& c, int budget) {
  if (c.dimension() != 2) {
    throw EnumerationError(EnumerationError::Kind::NotPlanar, "exact enumeration is planar only");
  }
  auto order = find_any_order(c);
  if (!order) {
    throw EnumerationError(EnumerationError::Kind::NoTrilaterationOrder,
                           "no declared unit edge admits a trilateration order");
  }
  return enumerate(c, *order, budget);
}

namespace {

std::vector<const PlacementSolution*> admissible(const Configuration& classified, const Enumeration& e, Mode mode,
                                                 int budget, bool& undecided) {
  std::vector<const PlacementSolution*> out;
  for (const PlacementSolution& s : e.solutions) {
    if (mode == Mode::Weak) {
      Check w = weak_admissible(classified, s, budget);
      if (w == Check::Violated) continue;
      if (w == Check::Undecided) {
        undecided = true;
        continue;
      }
    }
    out.push_back(&s);
  }
  return out;
}

}  // namespace

Spectrum spectrum(const Configuration& c, const std::string& x, const std::string& y, Mode mode, int budget) {
  c.point(x);
  c.point(y);
  require_valid(c, budget);
  Spectrum out;
  Enumeration e;
  try {
    e = enumerate(c, budget);
  } catch (const EnumerationError& err) {
    out.note = to_string(err.kind()) + ": " + err.what();
    return out;
  }
  Configuration classified = classify_pairs(c, budget);
  bool undecided = false;
  auto sols = admissible(classified, e, mode, budget, undecided);
  for (const PlacementSolution* s : sols) {
    CReal v = distance(s->point(x), s->point(y)).with_budget(budget).refined(budget);
    bool fresh = true;
    for (const CReal& w : out.values) {
      Ordering o = compare(v, w, budget);
      if (o == Ordering::Equal) {
        fresh = false;
        break;
      }
      if (o == Ordering::Undecided) undecided = true;
    }
    if (fresh) out.values.push_back(v);
  }
  std::stable_sort(out.values.begin(), out.values.end(),
                   [budget](const CReal& a, const CReal& b) { return compare(a, b, budget) == Ordering::Less; });
  out.solution_count = static_cast<long>(sols.size());
  out.complete = !undecided;
  if (undecided) out.note = "some comparisons were undecided within the precision budget";
  return out;
}

VerifyReport verify_detailed(const Configuration& c, const Claim& claim, int budget) {
  require_labels(c, claim);
  require_valid(c, budget);
  VerifyReport report;
  try {
    report.enumeration = enumerate(c, budget);
  } catch (const EnumerationError& err) {
    std::string why = "incomplete enumeration (" + to_string(err.kind()) + "): " + err.what();
    if (const auto* e = std::get_if<EpsilonClaim>(&claim)) {
      if (auto k = unit_graph_distance(c, e->x, e->y)) {
        // Every image distance lies in [0, k].
        CReal d = distance(c.point(e->x), c.point(e->y));
        Ordering low = compare(d, e->epsilon, budget);
        Ordering high = compare(CReal(static_cast<long>(*k)) - d, e->epsilon, budget);
        bool low_ok = low == Ordering::Less || low == Ordering::Equal;
        bool high_ok = high == Ordering::Less || high == Ordering::Equal;
        if (low_ok && high_ok) {
          report.verdict = Verdict::proven("unit-path bound: image distance in [0, " + std::to_string(*k) + "]");
          return report;
        }
      }
    }
    report.verdict = Verdict::undecided(why);
    return report;
  }
  Configuration classified = classify_pairs(c, budget);
  bool undecided = false;
  auto sols = admissible(classified, *report.enumeration, claim_mode(claim), budget, undecided);
  report.admissible = static_cast<long>(sols.size());
  for (const PlacementSolution* s : sols) {
    Check r = evaluate(c, claim, *s, budget);
    if (r == Check::Violated) {
      report.verdict = Verdict::refuted(*s, "enumerated placement violates the claim");
      return report;
    }
    if (r == Check::Undecided) undecided = true;
  }
  if (undecided) {
    report.verdict = Verdict::undecided("comparison undecided within " + std::to_string(budget) + " bits");
  } else {
    report.verdict = Verdict::proven("all " + std::to_string(sols.size()) + " admissible placements satisfy the claim");
  }
  return report;
}

Verdict verify(const Configuration& c, const Claim& claim, int budget) {
  return verify_detailed(c, claim, budget).verdict;
}

}  // namespace udrig
