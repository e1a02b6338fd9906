#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "udrig/configuration.hpp"
#include "udrig/placement.hpp"

namespace udrig {

using Json = nlohmann::ordered_json;

/// Configuration file format:
///
///   {"dimension": 2,
///    "points": [{"label": "X", "coords": ["0", "1/2*sqrt(3)"]}, ...],
///    "unit_edges": [["X", "Y"], ...]}
///
/// Coordinates are expression strings (or decimals, read as exact
/// rationals). Throws InputError naming the offending field.
Configuration configuration_from_json(const Json& j, int budget = kDefaultPrecision);
Configuration parse_configuration(std::string_view text, int budget = kDefaultPrecision);
Configuration load_configuration(const std::filesystem::path& path, int budget = kDefaultPrecision);

/// Canonical rendering; parse_configuration(print_configuration(c)) == c and
/// printing is a fixed point. Requires exact coordinates.
Json configuration_to_json(const Configuration& c);
std::string print_configuration(const Configuration& c);

void save_configuration(const Configuration& c, const std::filesystem::path& path);

/// {"expr": "...", "interval": ["lo", "hi"]} with decimal endpoints rounded
/// outward.
Json creal_to_json(const CReal& v, int digits = 30);

Json placement_to_json(const PlacementSolution& s, int digits = 30);

}  // namespace udrig
