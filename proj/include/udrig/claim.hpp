#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "udrig/configuration.hpp"
#include "udrig/placement.hpp"

namespace udrig {

/// Strong: every unit-distance-preserving map. Weak: only injective maps that
/// also keep non-unit pairs non-unit.
enum class Mode { Strong, Weak };

/// f preserves d(X, Y).
struct DistanceClaim {
  std::string x;
  std::string y;
  Mode mode = Mode::Strong;
};

/// d(f(K), f(L)) = d(f(M), f(N)).
struct CongruenceClaim {
  std::string k;
  std::string l;
  std::string m;
  std::string n;
  Mode mode = Mode::Strong;
};

/// |d(f(X), f(Y)) - d(X, Y)| <= epsilon.
struct EpsilonClaim {
  std::string x;
  std::string y;
  CReal epsilon;
};

using Claim = std::variant<DistanceClaim, CongruenceClaim, EpsilonClaim>;

/// Accepts "star:X,Y", "wstar:X,Y", "diamond:K,L,M,N", "wdiamond:K,L,M,N"
/// and "eps:X,Y,<expr>". Throws InputError.
Claim parse_claim(std::string_view text);
std::string to_string(const Claim& claim);

std::vector<std::string> claim_labels(const Claim& claim);
Mode claim_mode(const Claim& claim);

/// Throws PreconditionError when a claim label is missing from `c`.
void require_labels(const Configuration& c, const Claim& claim);

enum class Check { Holds, Violated, Undecided };

/// Whether the placement `s` (an image of `c`) satisfies the claim.
Check evaluate(const Configuration& c, const Claim& claim, const PlacementSolution& s,
               int budget = kDefaultPrecision);

/// Magnitude by which `s` misses the claim: |d(fX,fY) - d(X,Y)|,
/// |d(fK,fL) - d(fM,fN)|, or the excess |d(fX,fY) - d(X,Y)| - epsilon.
CReal deviation(const Configuration& c, const Claim& claim, const PlacementSolution& s);

/// Weak-mode admissibility of a placement: injective, and no pair classified
/// NonUnit in `classified` lands at distance exactly 1.
Check weak_admissible(const Configuration& classified, const PlacementSolution& s, int budget = kDefaultPrecision);

enum class Outcome { Proven, Refuted, Undecided };

std::string to_string(Outcome o);

/// Floating-point search statistics attached by the refuter.
struct NumericEvidence {
  double residual = 0.0;
  double deviation = 0.0;
  int restart = -1;
};

struct Verdict {
  Outcome outcome = Outcome::Undecided;
  /// Refuted: an exact counterexample. Undecided: possibly a numeric one.
  std::optional<PlacementSolution> witness;
  std::string reason;
  std::optional<NumericEvidence> evidence;

  static Verdict proven(std::string reason = {});
  static Verdict refuted(PlacementSolution witness, std::string reason = {});
  static Verdict undecided(std::string reason);
};

}  // namespace udrig
