#pragma once

#include <filesystem>
#include <string>

#include "oracle/oracle.hpp"
#include "udrig/config_io.hpp"
#include "udrig/tower.hpp"

namespace testing {

inline std::filesystem::path gadget_dir() { return std::filesystem::path(UDRIG_DATA_DIR) / "gadgets"; }

inline udrig::Configuration gadget(const std::string& name) {
  return udrig::load_configuration(gadget_dir() / (name + ".json"));
}

inline udrig::TowerElem te(const char* text) { return udrig::TowerElem::parse(text); }

inline oracle::Graph to_graph(const udrig::Configuration& c, const std::string& base0, const std::string& base1) {
  oracle::Graph g;
  g.n = static_cast<int>(c.size());
  for (const auto& e : c.unit_edges()) {
    g.edges.emplace_back(static_cast<int>(*c.index_of(e.first)), static_cast<int>(*c.index_of(e.second)));
  }
  g.base0 = static_cast<int>(*c.index_of(base0));
  g.base1 = static_cast<int>(*c.index_of(base1));
  return g;
}

}  // namespace testing
