#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udrig/combinator.hpp"
#include "udrig/config_io.hpp"
#include "udrig/congruence.hpp"
#include "udrig/enumerator.hpp"
#include "udrig/gadgets.hpp"

namespace udrig {

inline constexpr const char* kVersion = "1.0.0";

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256 hex
  Json parameters = Json::object();
  std::string version = kVersion;
  std::optional<double> wall_clock_ms;  // omitted unless requested
};

Json manifest_to_json(const RunManifest& m);

Json validation_to_json(const ValidationReport& r);
Json order_to_json(const TrilaterationOrder& o);
Json stats_to_json(const BranchStats& s);
Json enumeration_to_json(const Enumeration& e, int digits = 30);
Json spectrum_to_json(const Spectrum& s, int digits = 30);
Json verdict_to_json(const Verdict& v, int digits = 30);
Json kits_to_json(const std::vector<KitRecord>& kits, int digits = 30);
Json closure_to_json(const std::vector<ClosurePoint>& pts, int digits = 30);
Json search_to_json(const SearchResult& r, int digits = 30);
Json truncation_to_json(const TruncationResult& r);

/// Fixed-width text table of a truncation result.
std::string truncation_table(const TruncationResult& r);

}  // namespace udrig
