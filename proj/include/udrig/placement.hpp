#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "udrig/configuration.hpp"

namespace udrig {

/// Exact placement reached through circle-intersection choices. A choice of
/// -1 marks a point that was not placed by an intersection.
struct ExactProvenance {
  std::vector<int> branch_path;
};

/// Placement produced by floating-point search; coordinates are the exact
/// binary values of the doubles found.
struct NumericProvenance {
  double residual = 0.0;
};

using Provenance = std::variant<ExactProvenance, NumericProvenance>;

/// An assignment of coordinates to every label of a configuration: the image
/// of the points under a map f. Labels are kept in configuration order.
class PlacementSolution {
 public:
  PlacementSolution() = default;
  PlacementSolution(std::vector<std::string> labels, std::vector<std::vector<CReal>> coords, Provenance provenance);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<CReal>>& coords() const { return coords_; }
  const Provenance& provenance() const { return provenance_; }
  bool is_exact() const { return std::holds_alternative<ExactProvenance>(provenance_); }

  /// Throws PreconditionError for unknown labels.
  const std::vector<CReal>& at(std::string_view label) const;
  Point point(std::string_view label) const;

  PlacementSolution with_provenance(Provenance p) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<CReal>> coords_;
  Provenance provenance_;
};

/// The identity placement of a configuration.
PlacementSolution placement_of(const Configuration& c);

/// True when both placements assign exactly equal coordinates to the same
/// labels (exact coordinates only).
bool same_positions(const PlacementSolution& a, const PlacementSolution& b);

/// Applies the isometry that sends `base_first` to the origin, `base_second`
/// onto the positive first axis, and the first label (in order) with a nonzero
/// second coordinate into the upper half-plane. Planar only.
/// Throws PreconditionError when the base images coincide or a sign cannot be
/// certified.
PlacementSolution canonical_frame(const PlacementSolution& s, std::string_view base_first,
                                  std::string_view base_second);

}  // namespace udrig
