#pragma once

#include <functional>
#include <string>
#include <vector>

#include "udrig/configuration.hpp"
#include "udrig/gadgets.hpp"

namespace udrig {

/// Produces a configuration containing P and Q at their coordinates in
/// `source` on which EpsilonClaim(P, Q, eps) verifies as Proven, or throws.
using TBuilder = std::function<Configuration(const Configuration& source, const std::string& p, const std::string& q,
                                             const CReal& eps)>;

/// build_epsilon_witness seeded with the two points (and their edge, if any);
/// when that fails, seeded with the whole source configuration.
TBuilder default_tbuilder(SearchBudget budget = {}, int precision = kDefaultPrecision);

enum class KitKind { Distinctness, NonUnit };
std::string to_string(KitKind k);

struct KitRecord {
  KitKind kind = KitKind::Distinctness;
  LabelPair pair;
  CReal epsilon;
  std::size_t points = 0;  // size of the kit
  std::size_t added = 0;   // points new to the merged result
};

struct Strengthened {
  Configuration config;
  std::vector<KitRecord> kits;
};

class KitFailure : public Error {
 public:
  using Error::Error;
};

/// t(P, Q, d(P,Q)/2). Throws PreconditionError when P and Q coincide.
Configuration distinctness_kit(const Configuration& source, const std::string& p, const std::string& q,
                               const TBuilder& t, int precision = kDefaultPrecision);

/// t(P, Q, |d(P,Q) - 1|/2). Throws PreconditionError unless d(P,Q) != 1 is
/// certified.
Configuration non_unit_kit(const Configuration& source, const std::string& p, const std::string& q,
                           const TBuilder& t, int precision = kDefaultPrecision);

/// Adds the points of `kit` to `base`, identifying points with exactly equal
/// coordinates; kit labels already used for another point are renamed.
/// Returns the merged configuration and the number of new points.
std::pair<Configuration, std::size_t> merge_kit(const Configuration& base, const Configuration& kit);

/// S united with t(P,Q,d(P,Q)/2) for every unordered pair P != Q and
/// t(P,Q,|d(P,Q)-1|/2) for every pair with certified d(P,Q) != 1; certified
/// unit pairs across kits are declared afterwards. Kits are requested in
/// point order, distinctness kits first. Throws PreconditionError on an
/// undecided pair and KitFailure when the builder fails.
Strengthened strengthen_star(const Configuration& s, const std::string& x, const std::string& y, const TBuilder& t,
                             int precision = kDefaultPrecision);

Strengthened strengthen_diamond(const Configuration& c, const std::string& k, const std::string& l,
                                const std::string& m, const std::string& n, const TBuilder& t,
                                int precision = kDefaultPrecision);

}  // namespace udrig
