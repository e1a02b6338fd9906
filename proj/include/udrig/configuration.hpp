#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "udrig/creal.hpp"
#include "udrig/errors.hpp"

namespace udrig {

enum class PairClass { Unit, NonUnit, Undecided };

std::string to_string(PairClass c);

/// Unordered pair of labels, stored with first < second.
struct LabelPair {
  std::string first;
  std::string second;

  static LabelPair of(std::string a, std::string b);

  auto operator<=>(const LabelPair&) const = default;
};

std::string to_string(const LabelPair& p);

struct Point {
  std::string label;
  std::vector<CReal> coords;
};

/// Finite labeled point set with declared unit edges and a certified
/// classification of every pair of distinct points.
class Configuration {
 public:
  explicit Configuration(int dimension = 2);

  int dimension() const { return dimension_; }
  const std::vector<Point>& points() const { return points_; }
  const std::set<LabelPair>& unit_edges() const { return unit_edges_; }
  /// Empty until classify_pairs() has run.
  const std::map<LabelPair, PairClass>& pair_table() const { return pair_table_; }

  std::size_t size() const { return points_.size(); }
  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Throws PreconditionError for unknown labels.
  const Point& point(std::string_view label) const;
  bool contains(std::string_view label) const { return index_of(label).has_value(); }
  bool has_edge(std::string_view a, std::string_view b) const;

  /// Throws InputError on duplicate labels or a wrong coordinate count.
  void add_point(Point p);
  /// Throws InputError on unknown labels or self-loops.
  void add_edge(std::string_view a, std::string_view b);

  void set_pair_table(std::map<LabelPair, PairClass> table) { pair_table_ = std::move(table); }

  /// Label not yet used, derived from `stem`.
  std::string fresh_label(std::string_view stem) const;

  /// Labels adjacent to `label` through declared unit edges, in point order.
  std::vector<std::string> neighbors(std::string_view label) const;

 private:
  int dimension_;
  std::vector<Point> points_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::set<LabelPair> unit_edges_;
  std::map<LabelPair, PairClass> pair_table_;
};

/// Euclidean distance; exact whenever both points are.
CReal distance(const Point& p, const Point& q);
CReal squared_distance(const Point& p, const Point& q);

/// Returns `c` with its pair table filled: Unit when the squared distance is
/// certified equal to 1, NonUnit when certified different, Undecided when the
/// budget runs out first.
Configuration classify_pairs(const Configuration& c, int budget = kDefaultPrecision);

struct ValidationReport {
  std::vector<LabelPair> uncertified_edges;  // declared but not certified Unit
  std::vector<LabelPair> undeclared_unit;    // certified Unit but not declared
  std::vector<LabelPair> undecided;

  bool valid() const { return uncertified_edges.empty() && undeclared_unit.empty() && undecided.empty(); }
};

ValidationReport validate(const Configuration& c, int budget = kDefaultPrecision);

/// Throws PreconditionError naming the first problem when `c` is not valid.
void require_valid(const Configuration& c, int budget = kDefaultPrecision);

/// Breadth-first distance in the unit-edge graph; nullopt when disconnected.
std::optional<int> unit_graph_distance(const Configuration& c, std::string_view from, std::string_view to);

/// Largest finite unit-graph distance over all pairs (at least 1).
int unit_graph_diameter(const Configuration& c);

/// Restriction of `c` to the given labels (edges between kept points only).
Configuration induced(const Configuration& c, const std::vector<std::string>& labels);

}  // namespace udrig
