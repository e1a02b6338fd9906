#include "udrig/refuter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "udrig/plane.hpp"

namespace udrig {

void RefuterParams::validate() const {
  if (restarts < 1) throw PreconditionError("refuter: restarts must be positive");
  if (max_iterations < 1) throw PreconditionError("refuter: max_iterations must be positive");
  if (!(residual_tol > 0) || !(deviation_tol > 0)) throw PreconditionError("refuter: tolerances must be positive");
  if (!(residual_tol < deviation_tol)) throw PreconditionError("refuter: residual_tol must be below deviation_tol");
}

CReal linkage_bound(const Configuration& c, const std::string& x, const std::string& y) {
  c.point(x);
  c.point(y);
  auto k = unit_graph_distance(c, x, y);
  if (!k) throw PreconditionError("linkage_bound: '" + x + "' and '" + y + "' are not joined by unit edges");
  return CReal(static_cast<long>(*k));
}

namespace kernel {

Problem make_problem(const Configuration& c, const Claim& claim) {
  Problem p;
  p.dimension = c.dimension();
  p.points = static_cast<int>(c.size());
  for (const LabelPair& e : c.unit_edges()) {
    p.edges.emplace_back(static_cast<int>(*c.index_of(e.first)), static_cast<int>(*c.index_of(e.second)));
  }
  auto idx = [&](const std::string& l) { return static_cast<int>(*c.index_of(l)); };
  auto graph_bound = [&](const std::string& a, const std::string& b) {
    auto k = unit_graph_distance(c, a, b);
    return k ? static_cast<double>(*k) : static_cast<double>(c.size());
  };
  p.radius = static_cast<double>(unit_graph_diameter(c));
  if (const auto* d = std::get_if<DistanceClaim>(&claim)) {
    p.kind = 0;
    p.i0 = idx(d->x);
    p.i1 = idx(d->y);
    p.target = distance(c.point(d->x), c.point(d->y)).approx();
    p.bound = graph_bound(d->x, d->y);
  } else if (const auto* k = std::get_if<CongruenceClaim>(&claim)) {
    p.kind = 1;
    p.i0 = idx(k->k);
    p.i1 = idx(k->l);
    p.i2 = idx(k->m);
    p.i3 = idx(k->n);
    p.bound = std::max(graph_bound(k->k, k->l), graph_bound(k->m, k->n));
  } else {
    const auto& e = std::get<EpsilonClaim>(claim);
    p.kind = 2;
    p.i0 = idx(e.x);
    p.i1 = idx(e.y);
    p.target = distance(c.point(e.x), c.point(e.y)).approx();
    p.epsilon = e.epsilon.approx();
    p.bound = graph_bound(e.x, e.y);
  }
  return p;
}

}  // namespace kernel

namespace {

Rational grid(double v) {
  return Rational(Integer(static_cast<long>(std::lround(std::ldexp(v, 30))))) / pow2(30);
}

std::vector<double> frame_numeric(const Configuration& c, std::vector<double> x, std::size_t anchor,
                                  std::optional<std::size_t> toward) {
  double ox = x[2 * anchor], oy = x[2 * anchor + 1];
  for (std::size_t i = 0; i < c.size(); ++i) {
    x[2 * i] -= ox;
    x[2 * i + 1] -= oy;
  }
  if (toward) {
    double ang = std::atan2(x[2 * *toward + 1], x[2 * *toward]);
    double cs = std::cos(-ang), sn = std::sin(-ang);
    for (std::size_t i = 0; i < c.size(); ++i) {
      double a = x[2 * i], b = x[2 * i + 1];
      x[2 * i] = cs * a - sn * b;
      x[2 * i + 1] = sn * a + cs * b;
    }
  }
  return x;
}

// Rational point on the unit circle around p closest to direction (dx, dy).
Vec2 rational_unit_step(const Vec2& p, double dx, double dy) {
  double theta = std::atan2(dy, dx);
  bool flip = std::abs(theta) > std::numbers::pi / 2;
  if (flip) theta += theta > 0 ? -std::numbers::pi : std::numbers::pi;
  Rational t = grid(std::tan(theta / 2));
  Rational den = 1 + t * t;
  Rational ux = (1 - t * t) / den;
  Rational uy = 2 * t / den;
  if (flip) {
    ux = -ux;
    uy = -uy;
  }
  return {p.x + TowerElem(ux), p.y + TowerElem(uy)};
}

// Exact placement near the numeric one, following a greedy placement order.
std::optional<PlacementSolution> snap(const Configuration& c, const std::vector<double>& numeric, int budget) {
  const std::size_t n = c.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const LabelPair& e : c.unit_edges()) {
    std::size_t i = *c.index_of(e.first), j = *c.index_of(e.second);
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::size_t anchor = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!adj[i].empty()) {
      anchor = i;
      break;
    }
  }
  std::optional<std::size_t> toward;
  if (!adj[anchor].empty()) toward = *std::min_element(adj[anchor].begin(), adj[anchor].end());
  std::vector<double> x = frame_numeric(c, numeric, anchor, toward);

  std::vector<std::optional<Vec2>> image(n);
  std::vector<int> order_pos(n, -1);
  std::vector<int> path(n, -1);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    int best = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (image[i]) continue;
      int placed = 0;
      for (std::size_t j : adj[i]) placed += image[j] ? 1 : 0;
      if (step == 0) placed = i == anchor ? 1 : -1;
      if (placed > best) {
        best = placed;
        pick = i;
      }
    }
    std::vector<std::size_t> nbrs;
    for (std::size_t j : adj[pick]) {
      if (image[j]) nbrs.push_back(j);
    }
    std::sort(nbrs.begin(), nbrs.end(), [&](std::size_t a, std::size_t b) { return order_pos[a] < order_pos[b]; });
    double px = x[2 * pick], py = x[2 * pick + 1];
    std::optional<Vec2> v;
    if (nbrs.size() >= 2) {
      const Vec2& p = *image[nbrs[0]];
      const Vec2& q = *image[nbrs[1]];
      CircleIntersection hit = intersect_unit_circles(p, q, budget);
      if (hit.kind == IntersectionKind::Two || hit.kind == IntersectionKind::Tangent) {
        std::size_t choice = 0;
        double best_d = INFINITY;
        for (std::size_t k = 0; k < hit.points.size(); ++k) {
          double d = std::hypot(hit.points[k].x.approx() - px, hit.points[k].y.approx() - py);
          if (d < best_d) {
            best_d = d;
            choice = k;
          }
        }
        v = hit.points[choice];
        path[pick] = static_cast<int>(choice);
      } else if (hit.kind != IntersectionKind::Continuum) {
        return std::nullopt;
      }
    }
    if (!v && !nbrs.empty()) {
      const Vec2& p = *image[nbrs[0]];
      v = rational_unit_step(p, px - p.x.approx(), py - p.y.approx());
    }
    if (!v) v = Vec2{TowerElem(grid(px)), TowerElem(grid(py))};
    image[pick] = *v;
    order_pos[pick] = static_cast<int>(step);
  }
  for (const LabelPair& e : c.unit_edges()) {
    if (norm2(*image[*c.index_of(e.first)] - *image[*c.index_of(e.second)]) != TowerElem(1L)) return std::nullopt;
  }
  std::vector<std::string> labels;
  std::vector<std::vector<CReal>> coords;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(c.points()[i].label);
    coords.push_back(to_coords(*image[i]));
  }
  return PlacementSolution(std::move(labels), std::move(coords), ExactProvenance{path});
}

PlacementSolution numeric_witness(const Configuration& c, const kernel::Candidate& cand) {
  std::vector<std::string> labels;
  std::vector<std::vector<CReal>> coords;
  const int dim = c.dimension();
  for (std::size_t i = 0; i < c.size(); ++i) {
    labels.push_back(c.points()[i].label);
    std::vector<CReal> pt;
    for (int k = 0; k < dim; ++k) pt.emplace_back(rational_from_double(cand.x[i * dim + k]));
    coords.push_back(std::move(pt));
  }
  return PlacementSolution(std::move(labels), std::move(coords), NumericProvenance{cand.residual});
}

constexpr std::size_t kCertifyAttempts = 16;

}  // namespace

Verdict refute(const Configuration& c, const Claim& claim, const RefuterParams& params, int budget) {
  params.validate();
  require_labels(c, claim);
  require_valid(c, budget);
  kernel::Problem problem = kernel::make_problem(c, claim);
  std::vector<kernel::Candidate> all = kernel::run_restarts(problem, params);

  std::vector<const kernel::Candidate*> accepted;
  for (const kernel::Candidate& k : all) {
    if (k.accepted) accepted.push_back(&k);
  }
  std::stable_sort(accepted.begin(), accepted.end(),
                   [](const kernel::Candidate* a, const kernel::Candidate* b) { return a->deviation > b->deviation; });
  if (accepted.empty()) return Verdict::undecided("no counterexample found");

  if (c.dimension() == 2) {
    Configuration classified = claim_mode(claim) == Mode::Weak ? classify_pairs(c, budget) : c;
    for (std::size_t i = 0; i < accepted.size() && i < kCertifyAttempts; ++i) {
      auto exact = snap(c, accepted[i]->x, budget);
      if (!exact) continue;
      if (claim_mode(claim) == Mode::Weak && weak_admissible(classified, *exact, budget) != Check::Holds) continue;
      if (evaluate(c, claim, *exact, budget) != Check::Violated) continue;
      Verdict v = Verdict::refuted(*exact, "certified counterexample from restart " +
                                               std::to_string(accepted[i]->restart));
      v.evidence = NumericEvidence{accepted[i]->residual, accepted[i]->deviation, accepted[i]->restart};
      return v;
    }
  }
  const kernel::Candidate& best = *accepted.front();
  Verdict v = Verdict::undecided("numeric-only counterexample");
  v.witness = numeric_witness(c, best);
  v.evidence = NumericEvidence{best.residual, best.deviation, best.restart};
  return v;
}

Verdict verify_or_refute(const Configuration& c, const Claim& claim, const RefuterParams& params, int budget) {
  VerifyReport r = verify_detailed(c, claim, budget);
  if (r.verdict.outcome != Outcome::Undecided || r.enumeration) return r.verdict;
  Verdict numeric = refute(c, claim, params, budget);
  if (numeric.outcome == Outcome::Refuted) return numeric;
  numeric.reason = r.verdict.reason + "; refuter: " + numeric.reason;
  return numeric;
}

}  // namespace udrig
