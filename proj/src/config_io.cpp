#include "udrig/config_io.hpp"

#include <fstream>
#include <sstream>

namespace udrig {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) throw InputError(where + name + ": missing field");
  return j.at(name);
}

}  // namespace

Configuration configuration_from_json(const Json& j, int budget) {
  if (!j.is_object()) throw InputError("configuration: expected a JSON object");
  int dimension = 2;
  if (j.contains("dimension")) {
    const Json& d = j.at("dimension");
    if (!d.is_number_integer()) throw InputError("dimension: expected an integer");
    dimension = d.get<int>();
    if (dimension < 2) throw InputError("dimension: must be at least 2");
  }
  Configuration c(dimension);
  const Json& points = field(j, "points", "");
  if (!points.is_array()) throw InputError("points: expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "].";
    const Json& p = points[i];
    const Json& label = field(p, "label", where);
    if (!label.is_string()) throw InputError(where + "label: expected a string");
    const Json& coords = field(p, "coords", where);
    if (!coords.is_array()) throw InputError(where + "coords: expected an array");
    Point pt{label.get<std::string>(), {}};
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const std::string cw = where + "coords[" + std::to_string(k) + "]";
      const Json& v = coords[k];
      if (!v.is_string()) throw InputError(cw + ": expected an expression string");
      try {
        pt.coords.push_back(CReal::parse(v.get<std::string>(), budget));
      } catch (const std::invalid_argument& e) {
        throw InputError(cw + ": " + e.what());
      } catch (const std::domain_error& e) {
        throw InputError(cw + ": " + e.what());
      }
    }
    c.add_point(std::move(pt));
  }
  if (j.contains("unit_edges")) {
    const Json& edges = j.at("unit_edges");
    if (!edges.is_array()) throw InputError("unit_edges: expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Json& e = edges[i];
      const std::string where = "unit_edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw InputError(where + ": expected a pair of labels");
      }
      try {
        c.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
      } catch (const InputError& err) {
        throw InputError(where + ": " + err.what());
      }
    }
  }
  return c;
}

Configuration parse_configuration(std::string_view text, int budget) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("configuration: malformed JSON: ") + e.what());
  }
  return configuration_from_json(j, budget);
}

Configuration load_configuration(const std::filesystem::path& path, int budget) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_configuration(ss.str(), budget);
}

Json configuration_to_json(const Configuration& c) {
  Json j;
  j["dimension"] = c.dimension();
  Json points = Json::array();
  for (const Point& p : c.points()) {
    Json coords = Json::array();
    for (const CReal& v : p.coords) {
      if (!v.is_exact()) throw PreconditionError("cannot serialize inexact coordinate of '" + p.label + "'");
      coords.push_back(v.exact().to_string());
    }
    points.push_back(Json{{"label", p.label}, {"coords", coords}});
  }
  j["points"] = points;
  Json edges = Json::array();
  for (const LabelPair& e : c.unit_edges()) edges.push_back(Json::array({e.first, e.second}));
  j["unit_edges"] = edges;
  return j;
}

std::string print_configuration(const Configuration& c) { return configuration_to_json(c).dump(2) + "\n"; }

void save_configuration(const Configuration& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << print_configuration(c);
}

Json creal_to_json(const CReal& v, int digits) {
  Json j;
  CReal r = v.refined(4 * digits + 16);
  j["expr"] = v.is_exact() ? v.exact().to_string() : v.to_string();
  j["interval"] = Json::array({to_decimal(r.interval().lo(), digits, false), to_decimal(r.interval().hi(), digits, true)});
  return j;
}

Json placement_to_json(const PlacementSolution& s, int digits) {
  Json j;
  if (const auto* ex = std::get_if<ExactProvenance>(&s.provenance())) {
    j["provenance"] = "exact";
    j["branch_path"] = ex->branch_path;
  } else {
    j["provenance"] = "numeric";
    std::ostringstream ss;
    ss.precision(6);
    ss << std::scientific << std::get<NumericProvenance>(s.provenance()).residual;
    j["residual"] = ss.str();
  }
  Json pts = Json::array();
  for (std::size_t i = 0; i < s.labels().size(); ++i) {
    Json coords = Json::array();
    for (const CReal& v : s.coords()[i]) coords.push_back(creal_to_json(v, digits));
    pts.push_back(Json{{"label", s.labels()[i]}, {"coords", coords}});
  }
  j["points"] = pts;
  return j;
}

}  // namespace udrig
