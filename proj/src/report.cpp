#include "udrig/report.hpp"

#include <cstdio>
#include <sstream>

namespace udrig {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

Json pair_list(const std::vector<LabelPair>& pairs) {
  Json j = Json::array();
  for (const LabelPair& p : pairs) j.push_back(Json::array({p.first, p.second}));
  return j;
}

}  // namespace

Json manifest_to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  Json inputs = Json::array();
  for (const auto& [path, digest] : m.inputs) inputs.push_back(Json{{"path", path}, {"sha256", digest}});
  j["inputs"] = inputs;
  j["parameters"] = m.parameters;
  j["version"] = m.version;
  if (m.wall_clock_ms) j["wall_clock_ms"] = *m.wall_clock_ms;
  return j;
}

Json validation_to_json(const ValidationReport& r) {
  return Json{{"valid", r.valid()},
              {"uncertified_edges", pair_list(r.uncertified_edges)},
              {"undeclared_unit", pair_list(r.undeclared_unit)},
              {"undecided", pair_list(r.undecided)}};
}

Json order_to_json(const TrilaterationOrder& o) {
  Json supports = Json::array();
  for (const auto& [p, q] : o.supports) supports.push_back(Json::array({p, q}));
  return Json{{"base", Json::array({o.base_first, o.base_second})}, {"sequence", o.sequence}, {"supports", supports}};
}

Json stats_to_json(const BranchStats& s) {
  return Json{{"nodes", s.nodes},
              {"infeasible", s.infeasible},
              {"edge_rejections", s.edge_rejections},
              {"leaves", s.leaves},
              {"duplicates", s.duplicates}};
}

Json enumeration_to_json(const Enumeration& e, int digits) {
  Json sols = Json::array();
  for (const PlacementSolution& s : e.solutions) sols.push_back(placement_to_json(s, digits));
  return Json{{"order", order_to_json(e.order)},
              {"solution_count", e.solutions.size()},
              {"branch_statistics", stats_to_json(e.stats)},
              {"solutions", sols}};
}

Json spectrum_to_json(const Spectrum& s, int digits) {
  Json values = Json::array();
  for (const CReal& v : s.values) values.push_back(creal_to_json(v, digits));
  Json j{{"values", values}, {"complete", s.complete}, {"solution_count", s.solution_count}};
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json verdict_to_json(const Verdict& v, int digits) {
  Json j{{"outcome", to_string(v.outcome)}, {"reason", v.reason}};
  if (v.witness) j["witness"] = placement_to_json(*v.witness, digits);
  if (v.evidence) {
    j["residual"] = sci(v.evidence->residual);
    j["deviation"] = sci(v.evidence->deviation);
    j["restart"] = v.evidence->restart;
  }
  return j;
}

Json kits_to_json(const std::vector<KitRecord>& kits, int digits) {
  Json j = Json::array();
  for (const KitRecord& k : kits) {
    j.push_back(Json{{"kind", to_string(k.kind)},
                     {"pair", Json::array({k.pair.first, k.pair.second})},
                     {"epsilon", creal_to_json(k.epsilon, digits)},
                     {"points", k.points},
                     {"added", k.added}});
  }
  return j;
}

Json closure_to_json(const std::vector<ClosurePoint>& pts, int digits) {
  Json j = Json::array();
  for (const ClosurePoint& p : pts) {
    Json coords = Json::array();
    for (const CReal& v : p.point.coords) coords.push_back(creal_to_json(v, digits));
    j.push_back(Json{{"label", p.point.label},
                     {"coords", coords},
                     {"parents", Json::array({p.parent_first, p.parent_second})},
                     {"depth", p.depth}});
  }
  return j;
}

Json search_to_json(const SearchResult& r, int digits) {
  Json j{{"success", r.success},
         {"explored", r.explored},
         {"added", r.best_added},
         {"best_spectrum", spectrum_to_json(r.best_spectrum, digits)}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) j["witness"] = configuration_to_json(*r.witness);
  return j;
}

Json truncation_to_json(const TruncationResult& r) {
  Json levels = Json::array();
  for (const LevelResult& lv : r.levels) {
    Json l{{"n", lv.n}, {"closed_form", lv.closed_form}, {"search", lv.search}, {"false_by_search", lv.false_by_search}};
    if (lv.feasible) {
      l["feasible"] = Json::array({lv.feasible->first.to_string(), lv.feasible->second.to_string()});
    }
    if (lv.simplest) l["simplest_r"] = to_string(*lv.simplest);
    if (lv.witness) {
      l["witness"] = Json{{"r", to_string(lv.witness->r)},
                          {"x", Json::array({lv.witness->x.x.to_string(), lv.witness->x.y.to_string()})},
                          {"y", Json::array({lv.witness->y.x.to_string(), lv.witness->y.y.to_string()})}};
    }
    levels.push_back(l);
  }
  Json j{{"levels", levels}, {"closed_form", r.closed_form}, {"search", r.search}};
  j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  return j;
}

std::string truncation_table(const TruncationResult& r) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%5s  %-11s  %-11s  %s\n", "n", "closed-form", "search", "witness r");
  out << line;
  for (const LevelResult& lv : r.levels) {
    std::string search = lv.search ? "true" : (lv.false_by_search ? "false*" : "false");
    std::string w = lv.witness ? to_string(lv.witness->r) : "-";
    std::snprintf(line, sizeof line, "%5d  %-11s  %-11s  %s\n", lv.n, lv.closed_form ? "true" : "false",
                  search.c_str(), w.c_str());
    out << line;
  }
  if (r.first_failure) out << "first failure at n = " << *r.first_failure << "\n";
  return out.str();
}

}  // namespace udrig
