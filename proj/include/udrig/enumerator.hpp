#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udrig/claim.hpp"
#include "udrig/configuration.hpp"
#include "udrig/placement.hpp"

namespace udrig {

/// Placement order in which every point after the base edge is pinned by two
/// earlier points. The second support is always a unit neighbour. The first
/// one is too, unless derived[k] is non-empty: then its distance to the point
/// ranges over derived[k], the complete spectrum of that pair in a smaller
/// sub-configuration.
struct TrilaterationOrder {
  std::string base_first;
  std::string base_second;
  std::vector<std::string> sequence;
  std::vector<std::pair<std::string, std::string>> supports;
  std::vector<std::vector<TowerElem>> derived;
};

class EnumerationError : public Error {
 public:
  enum class Kind { NoTrilaterationOrder, ContinuumBranch, PrecisionExhausted, NotPlanar };

  EnumerationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string to_string(EnumerationError::Kind k);

/// Greedy construction from the declared unit edge (a, b): repeatedly append
/// the first unplaced point (in configuration order) with at least two placed
/// unit neighbours; its supports are the two earliest-placed such neighbours.
/// With `derived` set, a stuck construction may continue with an unplaced
/// point U that has a placed unit neighbour V and a placed point W whose
/// distance to U takes finitely many values: those of the complete spectrum
/// of (W, U) in the configuration induced on W and the unplaced points.
/// Throws EnumerationError(NoTrilaterationOrder) when some point never
/// qualifies, PreconditionError when (a, b) is not a declared edge.
TrilaterationOrder find_order(const Configuration& c, const std::string& a, const std::string& b,
                              bool derived = true);

/// Tries declared edges in configuration order (by first, then second
/// endpoint index), first without derived supports, and returns the first
/// that admits an order.
std::optional<TrilaterationOrder> find_any_order(const Configuration& c);

struct BranchStats {
  long nodes = 0;           // circle intersections computed
  long infeasible = 0;      // supports more than 2 apart
  long edge_rejections = 0; // a further declared edge failed
  long leaves = 0;          // complete placements
  long duplicates = 0;      // leaves equal to an earlier one after framing
};

struct Enumeration {
  TrilaterationOrder order;
  std::vector<PlacementSolution> solutions;
  BranchStats stats;
};

/// All unit-distance-preserving placements of a planar configuration modulo
/// isometry, canonically framed on the order's base edge and deduplicated by
/// exact equality. Solutions are returned in depth-first branch order (first
/// intersection point = left of the supports).
/// Throws EnumerationError (ContinuumBranch, PrecisionExhausted, NotPlanar).
Enumeration enumerate(const Configuration& c, const TrilaterationOrder& order, int budget = kDefaultPrecision);

/// Enumerates with find_any_order(); throws NoTrilaterationOrder if none.
Enumeration enumerate(const Configuration& c, int budget = kDefaultPrecision);

/// Achievable image distances d(f(X), f(Y)).
struct Spectrum {
  std::vector<CReal> values;  // ascending, pairwise distinct
  bool complete = false;
  std::string note;           // why the spectrum is incomplete
  long solution_count = 0;    // placements that contributed
};

/// Weak mode drops non-injective placements and those sending a non-unit
/// pair to distance 1. Requires a valid configuration.
Spectrum spectrum(const Configuration& c, const std::string& x, const std::string& y, Mode mode = Mode::Strong,
                  int budget = kDefaultPrecision);

/// Exact verification over the enumerated placements. Proven requires a
/// complete enumeration; Refuted carries an exact counterexample. When the
/// enumeration cannot close, an EpsilonClaim may still be proven by the
/// unit-graph path bound (all image distances lie in [0, k]).
/// Throws PreconditionError for invalid configurations and unknown labels.
Verdict verify(const Configuration& c, const Claim& claim, int budget = kDefaultPrecision);

/// Like verify() but also reports the enumeration it used (if any).
struct VerifyReport {
  Verdict verdict;
  std::optional<Enumeration> enumeration;
  long admissible = 0;  // placements left after the weak-mode filter
};

VerifyReport verify_detailed(const Configuration& c, const Claim& claim, int budget = kDefaultPrecision);

}  // namespace udrig
