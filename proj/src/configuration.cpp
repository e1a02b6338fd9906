#include "udrig/configuration.hpp"

#include <deque>
#include <utility>

namespace udrig {

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::Unit:
      return "unit";
    case PairClass::NonUnit:
      return "non-unit";
    case PairClass::Undecided:
      return "undecided";
  }
  return "undecided";
}

LabelPair LabelPair::of(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return LabelPair{std::move(a), std::move(b)};
}

std::string to_string(const LabelPair& p) { return "{" + p.first + "," + p.second + "}"; }

Configuration::Configuration(int dimension) : dimension_(dimension) {
  if (dimension < 2) throw InputError("dimension: must be at least 2");
}

std::optional<std::size_t> Configuration::index_of(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Point& Configuration::point(std::string_view label) const {
  auto i = index_of(label);
  if (!i) throw PreconditionError("unknown label '" + std::string(label) + "'");
  return points_[*i];
}

bool Configuration::has_edge(std::string_view a, std::string_view b) const {
  return unit_edges_.count(LabelPair::of(std::string(a), std::string(b))) > 0;
}

void Configuration::add_point(Point p) {
  if (p.label.empty()) throw InputError("points.label: empty label");
  if (index_.count(p.label)) throw InputError("points.label: duplicate label '" + p.label + "'");
  if (static_cast<int>(p.coords.size()) != dimension_) {
    throw InputError("points.coords: point '" + p.label + "' has " + std::to_string(p.coords.size()) +
                     " coordinates, expected " + std::to_string(dimension_));
  }
  index_.emplace(p.label, points_.size());
  points_.push_back(std::move(p));
  pair_table_.clear();
}

void Configuration::add_edge(std::string_view a, std::string_view b) {
  if (!contains(a)) throw InputError("unit_edges: unknown label '" + std::string(a) + "'");
  if (!contains(b)) throw InputError("unit_edges: unknown label '" + std::string(b) + "'");
  if (a == b) throw InputError("unit_edges: self-loop on '" + std::string(a) + "'");
  unit_edges_.insert(LabelPair::of(std::string(a), std::string(b)));
  pair_table_.clear();
}

std::string Configuration::fresh_label(std::string_view stem) const {
  std::string base(stem);
  if (!contains(base)) return base;
  for (int i = 2;; ++i) {
    std::string candidate = base + "#" + std::to_string(i);
    if (!contains(candidate)) return candidate;
  }
}

std::vector<std::string> Configuration::neighbors(std::string_view label) const {
  std::vector<std::string> out;
  for (const Point& p : points_) {
    if (p.label != label && has_edge(label, p.label)) out.push_back(p.label);
  }
  return out;
}

CReal squared_distance(const Point& p, const Point& q) {
  if (p.coords.size() != q.coords.size()) {
    throw PreconditionError("distance: dimension mismatch between '" + p.label + "' and '" + q.label + "'");
  }
  CReal sum(0L);
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    CReal d = p.coords[i] - q.coords[i];
    sum = sum + d * d;
  }
  return sum;
}

CReal distance(const Point& p, const Point& q) { return sqrt(squared_distance(p, q)); }

Configuration classify_pairs(const Configuration& c, int budget) {
  std::map<LabelPair, PairClass> table;
  const CReal one(1L);
  const auto& pts = c.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Ordering o = compare(squared_distance(pts[i], pts[j]), one, budget);
      PairClass cls = o == Ordering::Equal       ? PairClass::Unit
                      : o == Ordering::Undecided ? PairClass::Undecided
                                                 : PairClass::NonUnit;
      table.emplace(LabelPair::of(pts[i].label, pts[j].label), cls);
    }
  }
  Configuration out = c;
  out.set_pair_table(std::move(table));
  return out;
}

ValidationReport validate(const Configuration& c, int budget) {
  Configuration classified = classify_pairs(c, budget);
  ValidationReport report;
  for (const auto& [pair, cls] : classified.pair_table()) {
    bool declared = c.unit_edges().count(pair) > 0;
    if (cls == PairClass::Undecided) {
      report.undecided.push_back(pair);
      if (declared) report.uncertified_edges.push_back(pair);
    } else if (cls == PairClass::Unit && !declared) {
      report.undeclared_unit.push_back(pair);
    } else if (cls == PairClass::NonUnit && declared) {
      report.uncertified_edges.push_back(pair);
    }
  }
  return report;
}

void require_valid(const Configuration& c, int budget) {
  ValidationReport r = validate(c, budget);
  if (!r.uncertified_edges.empty()) {
    throw PreconditionError("invalid configuration: declared edge " + to_string(r.uncertified_edges.front()) +
                            " is not certified unit");
  }
  if (!r.undeclared_unit.empty()) {
    throw PreconditionError("invalid configuration: undeclared unit pair " + to_string(r.undeclared_unit.front()));
  }
  if (!r.undecided.empty()) {
    throw PreconditionError("invalid configuration: pair " + to_string(r.undecided.front()) +
                            " could not be classified");
  }
}

std::optional<int> unit_graph_distance(const Configuration& c, std::string_view from, std::string_view to) {
  auto src = c.index_of(from);
  auto dst = c.index_of(to);
  if (!src) throw PreconditionError("unknown label '" + std::string(from) + "'");
  if (!dst) throw PreconditionError("unknown label '" + std::string(to) + "'");
  std::vector<int> dist(c.size(), -1);
  std::deque<std::size_t> queue{*src};
  dist[*src] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (u == *dst) return dist[u];
    for (const std::string& n : c.neighbors(c.points()[u].label)) {
      std::size_t v = *c.index_of(n);
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return std::nullopt;
}

int unit_graph_diameter(const Configuration& c) {
  int best = 1;
  for (const Point& a : c.points()) {
    for (const Point& b : c.points()) {
      if (auto d = unit_graph_distance(c, a.label, b.label)) best = std::max(best, *d);
    }
  }
  return best;
}

Configuration induced(const Configuration& c, const std::vector<std::string>& labels) {
  Configuration out(c.dimension());
  for (const Point& p : c.points()) {
    for (const std::string& l : labels) {
      if (l == p.label) {
        out.add_point(p);
        break;
      }
    }
  }
  for (const LabelPair& e : c.unit_edges()) {
    if (out.contains(e.first) && out.contains(e.second)) out.add_edge(e.first, e.second);
  }
  return out;
}

}  // namespace udrig
