#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "udrig/claim.hpp"
#include "udrig/config_io.hpp"
#include "udrig/configuration.hpp"
#include "udrig/enumerator.hpp"
#include "udrig/plane.hpp"

namespace udrig {

enum class Side { Up, Down };

/// Up: left of the directed segment P -> Q.
Side parse_side(std::string_view s);

/// Builders below add points with exact tower coordinates. A new point whose
/// position equals an existing point exactly reuses that point. Afterwards
/// every certified unit pair is declared, so valid inputs give valid outputs.
/// Labels default to fresh ones derived from the given stems.

/// Apex at unit distance from P and Q. Throws PreconditionError when
/// d(P,Q) > 2, P and Q coincide, or a comparison is undecided.
Configuration attach_triangle(const Configuration& c, const std::string& p, const std::string& q, Side side,
                              const std::string& apex = "T", int budget = kDefaultPrecision);

/// Tips A (up) and C (down) over the unit pair {B, D}; d(A, C) = sqrt(3).
Configuration attach_rhombus(const Configuration& c, const std::string& b, const std::string& d,
                             const std::string& a_label = "A", const std::string& c_label = "C",
                             int budget = kDefaultPrecision);

/// k - 1 intermediate points forming unit links from X to Y. Even k: equal
/// steps along XY with the odd-indexed points offset to the left. Odd k >= 3:
/// a middle link parallel to XY and equal zig-zags on both sides.
/// Throws PreconditionError when d(X,Y) > k, k < 1, or k == 1 with d != 1.
Configuration build_chain(const Configuration& c, const std::string& x, const std::string& y, int k,
                          const std::string& stem = "Z", int budget = kDefaultPrecision);

/// Two rhombi sharing the tip `a`: the first over the unit pair {a, b}, the
/// second its image under the rotation about `a` with cosine `cosine`
/// (default 5/6, which puts the far tips at unit distance: the Moser spindle).
Configuration build_spindle(const Configuration& c, const std::string& a, const std::string& b,
                            const TowerElem& cosine = TowerElem(Rational(5, 6)), const std::string& stem = "S",
                            int budget = kDefaultPrecision);

struct GadgetRecipe {
  enum class Kind { Triangle, Rhombus, Chain, Spindle, Custom };
  Kind kind = Kind::Custom;
  std::vector<std::string> labels;  // attachment labels
  std::vector<std::string> names;   // labels or stems for new points
  int k = 0;                        // chain link count
  Side side = Side::Up;
  std::optional<TowerElem> rotation;  // spindle cosine
  std::optional<Configuration> custom;  // merged as-is
  std::string provenance;
};

std::string to_string(GadgetRecipe::Kind k);

/// {"kind": "triangle"|"rhombus"|"chain"|"spindle"|"custom", "labels": [...],
///  "names": [...], "k": n, "side": "up"|"down", "rotation": "<expr>",
///  "config": {...}, "provenance": "..."}. Throws InputError.
GadgetRecipe recipe_from_json(const Json& j);

Configuration apply_recipe(const Configuration& c, const GadgetRecipe& r, int budget = kDefaultPrecision);

/// Unit-circle intersection point generated from two parents.
struct ClosurePoint {
  Point point;
  std::string parent_first;
  std::string parent_second;
  int depth = 0;
};

class ClosureBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Intersections of unit circles around existing and generated points,
/// iterated `depth` times and deduplicated exactly against everything seen.
/// Throws ClosureBudgetExceeded when more than `cap` candidates arise.
std::vector<ClosurePoint> constructible_closure(const Configuration& c, int depth, std::size_t cap = 4096,
                                                int budget = kDefaultPrecision);

/// Adds a closure point with unit edges to its parents (and to any other
/// certified unit partner).
Configuration adjoin(const Configuration& c, const ClosurePoint& p, int budget = kDefaultPrecision);

struct SearchBudget {
  int max_added = 2;        // points added along any branch
  int max_states = 200;     // configurations evaluated
  std::size_t cap = 4096;   // closure candidates per expansion
};

struct SearchResult {
  bool success = false;
  std::optional<Configuration> witness;
  Spectrum best_spectrum;  // spectrum of the best configuration seen
  int best_added = 0;
  int explored = 0;
  std::string note;
};

/// Best-first search over single-point closure augmentations for a
/// configuration on which verify(claim) is Proven. States are ranked by the
/// number of distinct claim quantities over the admissible solutions, then
/// by the largest deviation, then by discovery order.
SearchResult search_witness(const Configuration& c, const Claim& claim, const SearchBudget& budget,
                            int precision = kDefaultPrecision);

/// Shorthand for DistanceClaim(X, Y, strong).
SearchResult search_witness(const Configuration& c, const std::string& x, const std::string& y,
                            const SearchBudget& budget, int precision = kDefaultPrecision);

class NoVerifiedConstruction : public Error {
 public:
  using Error::Error;
};

struct EpsilonWitness {
  Configuration config;
  std::string strategy;  // "given", "chain" or "search"
};

/// A configuration containing X and Y (with their coordinates) on which
/// verify(EpsilonClaim(X, Y, eps)) is Proven: `c` itself, then `c` with a
/// ceil(d)-link chain from X to Y, then search_witness. Throws
/// NoVerifiedConstruction when the cascade is exhausted.
EpsilonWitness build_epsilon_witness(const Configuration& c, const std::string& x, const std::string& y,
                                     const CReal& epsilon, const SearchBudget& budget = {},
                                     int precision = kDefaultPrecision);

struct CatalogEntry {
  std::string name;
  std::filesystem::path path;
  Configuration config;
  Json expected;  // adjacent <name>.spectrum.json, or null
};

/// Every *.json in `dir` that is not a *.spectrum.json, sorted by name.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir);

}  // namespace udrig
