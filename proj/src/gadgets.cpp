#include "udrig/gadgets.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <unordered_map>

namespace udrig {

namespace {

Vec2 pos(const Configuration& c, const std::string& label) {
  if (c.dimension() != 2) throw PreconditionError("gadget builders are planar only");
  return exact_vec2(c.point(label).coords);
}

std::optional<std::string> find_at(const Configuration& c, const Vec2& v) {
  for (const Point& p : c.points()) {
    if (p.coords[0].is_exact() && p.coords[1].is_exact() && p.coords[0].exact() == v.x && p.coords[1].exact() == v.y) {
      return p.label;
    }
  }
  return std::nullopt;
}

// Adds v (or reuses the point already there) and unit edges to `to`.
std::string place(Configuration& c, const Vec2& v, const std::string& name, const std::vector<std::string>& to) {
  std::string label;
  if (auto existing = find_at(c, v)) {
    label = *existing;
  } else {
    label = c.contains(name) ? c.fresh_label(name) : name;
    c.add_point(Point{label, to_coords(v)});
  }
  for (const std::string& t : to) {
    if (t != label && !c.has_edge(label, t)) c.add_edge(label, t);
  }
  return label;
}

void declare_units(Configuration& c, int budget) {
  Configuration classified = classify_pairs(c, budget);
  for (const auto& [pair, cls] : classified.pair_table()) {
    if (cls == PairClass::Undecided) {
      throw PreconditionError("pair " + to_string(pair) + " cannot be classified within the precision budget");
    }
    if (cls == PairClass::Unit && !c.has_edge(pair.first, pair.second)) c.add_edge(pair.first, pair.second);
  }
}

std::string name_or(const std::vector<std::string>& names, std::size_t i, const std::string& fallback) {
  return i < names.size() ? names[i] : fallback;
}

}  // namespace

Side parse_side(std::string_view s) {
  if (s == "up") return Side::Up;
  if (s == "down") return Side::Down;
  throw InputError("side: expected 'up' or 'down', got '" + std::string(s) + "'");
}

Configuration attach_triangle(const Configuration& c, const std::string& p, const std::string& q, Side side,
                              const std::string& apex, int budget) {
  Vec2 a = pos(c, p);
  Vec2 b = pos(c, q);
  TowerElem d2 = norm2(b - a);
  if (d2.is_zero()) throw PreconditionError("attach_triangle: '" + p + "' and '" + q + "' coincide");
  if (compare_exact(d2, TowerElem(4L)) > 0) {
    throw PreconditionError("attach_triangle: d(" + p + "," + q + ") > 2, no apex exists");
  }
  CircleIntersection hit = intersect_unit_circles(a, b, budget);
  if (hit.points.empty()) throw PreconditionError("attach_triangle: apex undecided");
  const Vec2& v = hit.points.size() == 1 || side == Side::Up ? hit.points[0] : hit.points[1];
  Configuration out = c;
  place(out, v, apex, {p, q});
  declare_units(out, budget);
  return out;
}

Configuration attach_rhombus(const Configuration& c, const std::string& b, const std::string& d,
                             const std::string& a_label, const std::string& c_label, int budget) {
  Vec2 pb = pos(c, b);
  Vec2 pd = pos(c, d);
  if (norm2(pd - pb) != TowerElem(1L)) {
    throw PreconditionError("attach_rhombus: {" + b + "," + d + "} is not a unit pair");
  }
  CircleIntersection hit = intersect_unit_circles(pb, pd, budget);
  Configuration out = c;
  place(out, hit.points[0], a_label, {b, d});
  place(out, hit.points[1], c_label, {b, d});
  declare_units(out, budget);
  return out;
}

Configuration build_chain(const Configuration& c, const std::string& x, const std::string& y, int k,
                          const std::string& stem, int budget) {
  if (k < 1) throw PreconditionError("build_chain: k must be at least 1");
  Vec2 px = pos(c, x);
  Vec2 py = pos(c, y);
  Vec2 w = py - px;
  TowerElem d2 = norm2(w);
  if (compare_exact(d2, TowerElem(static_cast<long>(k) * k)) > 0) {
    throw PreconditionError("build_chain: d(" + x + "," + y + ") exceeds " + std::to_string(k));
  }
  Configuration out = c;
  if (k == 1) {
    if (d2 != TowerElem(1L)) throw PreconditionError("build_chain: k = 1 needs d(" + x + "," + y + ") = 1");
    if (!out.has_edge(x, y)) out.add_edge(x, y);
    return out;
  }
  if (d2.is_zero()) throw PreconditionError("build_chain: '" + x + "' and '" + y + "' coincide");
  TowerElem d = TowerElem::sqrt(d2);
  Vec2 u = (TowerElem(1L) / d) * w;
  Vec2 n = perp(u);
  std::vector<Vec2> pts;
  if (k % 2 == 0) {
    TowerElem a = d / TowerElem(static_cast<long>(k));
    TowerElem h = TowerElem::sqrt(TowerElem(1L) - a * a);
    for (int i = 1; i < k; ++i) {
      Vec2 v = px + TowerElem(static_cast<long>(i)) * a * u;
      if (i % 2 == 1) v = v + h * n;
      pts.push_back(v);
    }
  } else {
    const int m = (k - 1) / 2;
    TowerElem a = (d - TowerElem(1L)) / TowerElem(static_cast<long>(k - 1));
    TowerElem h = TowerElem::sqrt(TowerElem(1L) - a * a);
    auto side = [&](int i) { return i % 2 == 1 ? h * n : Vec2{TowerElem(0L), TowerElem(0L)}; };
    for (int i = 1; i <= m; ++i) pts.push_back(px + TowerElem(static_cast<long>(i)) * a * u + side(i));
    Vec2 mid = px + TowerElem(static_cast<long>(m)) * a * u + side(m) + u;
    Vec2 shift = mid - side(m);
    for (int j = 0; j < m; ++j) pts.push_back(shift + TowerElem(static_cast<long>(j)) * a * u + side(m + j));
  }
  std::string prev = x;
  for (const Vec2& v : pts) prev = place(out, v, stem, {prev});
  if (prev != y && !out.has_edge(prev, y)) out.add_edge(prev, y);
  declare_units(out, budget);
  return out;
}

Configuration build_spindle(const Configuration& c, const std::string& a, const std::string& b,
                            const TowerElem& cosine, const std::string& stem, int budget) {
  Vec2 pa = pos(c, a);
  Vec2 pb = pos(c, b);
  if (norm2(pb - pa) != TowerElem(1L)) throw PreconditionError("build_spindle: {" + a + "," + b + "} is not a unit pair");
  TowerElem s2 = TowerElem(1L) - cosine * cosine;
  if (s2.sign() < 0) throw PreconditionError("build_spindle: rotation cosine outside [-1, 1]");
  TowerElem sn = TowerElem::sqrt(s2);
  Vec2 c1 = intersect_unit_circles(pa, pb, budget).points[0];
  Vec2 d1 = pb + c1 - pa;
  // Clockwise rotation about a.
  auto rot = [&](const Vec2& v) {
    Vec2 r = v - pa;
    return pa + Vec2{cosine * r.x + sn * r.y, cosine * r.y - sn * r.x};
  };
  Configuration out = c;
  std::string lc1 = place(out, c1, stem + "C1", {a, b});
  std::string ld1 = place(out, d1, stem + "D1", {b, lc1});
  std::string lb2 = place(out, rot(pb), stem + "B2", {a});
  std::string lc2 = place(out, rot(c1), stem + "C2", {a, lb2});
  place(out, rot(d1), stem + "D2", {lb2, lc2});
  (void)ld1;
  declare_units(out, budget);
  return out;
}

std::string to_string(GadgetRecipe::Kind k) {
  switch (k) {
    case GadgetRecipe::Kind::Triangle:
      return "triangle";
    case GadgetRecipe::Kind::Rhombus:
      return "rhombus";
    case GadgetRecipe::Kind::Chain:
      return "chain";
    case GadgetRecipe::Kind::Spindle:
      return "spindle";
    case GadgetRecipe::Kind::Custom:
      return "custom";
  }
  return "custom";
}

GadgetRecipe recipe_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("recipe: expected an object");
  GadgetRecipe r;
  auto str = [&](const char* key) -> std::string {
    if (!j.contains(key)) return {};
    if (!j[key].is_string()) throw InputError(std::string("recipe.") + key + ": expected a string");
    return j[key].get<std::string>();
  };
  auto strings = [&](const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw InputError(std::string("recipe.") + key + ": expected an array");
    for (std::size_t i = 0; i < j[key].size(); ++i) {
      if (!j[key][i].is_string()) {
        throw InputError(std::string("recipe.") + key + "[" + std::to_string(i) + "]: expected a string");
      }
      out.push_back(j[key][i].get<std::string>());
    }
    return out;
  };
  std::string kind = str("kind");
  static const std::pair<const char*, GadgetRecipe::Kind> kinds[] = {{"triangle", GadgetRecipe::Kind::Triangle},
                                                                     {"rhombus", GadgetRecipe::Kind::Rhombus},
                                                                     {"chain", GadgetRecipe::Kind::Chain},
                                                                     {"spindle", GadgetRecipe::Kind::Spindle},
                                                                     {"custom", GadgetRecipe::Kind::Custom}};
  bool found = false;
  for (const auto& [name, value] : kinds) {
    if (kind == name) {
      r.kind = value;
      found = true;
    }
  }
  if (!found) throw InputError("recipe.kind: unknown kind '" + kind + "'");
  r.labels = strings("labels");
  r.names = strings("names");
  r.provenance = str("provenance");
  if (j.contains("k")) {
    if (!j["k"].is_number_integer()) throw InputError("recipe.k: expected an integer");
    r.k = j["k"].get<int>();
  }
  if (j.contains("side")) r.side = parse_side(str("side"));
  if (j.contains("rotation")) {
    try {
      r.rotation = TowerElem::parse(str("rotation"));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("recipe.rotation: ") + e.what());
    }
  }
  if (j.contains("config")) {
    try {
      r.custom = configuration_from_json(j["config"]);
    } catch (const InputError& e) {
      throw InputError(std::string("recipe.config.") + e.what());
    }
  }
  std::size_t need = r.kind == GadgetRecipe::Kind::Custom ? 0 : 2;
  if (r.labels.size() != need) {
    throw InputError("recipe.labels: expected " + std::to_string(need) + " labels for " + to_string(r.kind));
  }
  if (r.kind == GadgetRecipe::Kind::Custom && !r.custom) throw InputError("recipe.config: required for custom");
  return r;
}

Configuration apply_recipe(const Configuration& c, const GadgetRecipe& r, int budget) {
  switch (r.kind) {
    case GadgetRecipe::Kind::Triangle:
      return attach_triangle(c, r.labels[0], r.labels[1], r.side, name_or(r.names, 0, "T"), budget);
    case GadgetRecipe::Kind::Rhombus:
      return attach_rhombus(c, r.labels[0], r.labels[1], name_or(r.names, 0, "A"), name_or(r.names, 1, "C"),
                            budget);
    case GadgetRecipe::Kind::Chain:
      return build_chain(c, r.labels[0], r.labels[1], r.k, name_or(r.names, 0, "Z"), budget);
    case GadgetRecipe::Kind::Spindle:
      return build_spindle(c, r.labels[0], r.labels[1], r.rotation.value_or(TowerElem(Rational(5, 6))),
                           name_or(r.names, 0, ""), budget);
    case GadgetRecipe::Kind::Custom:
      break;
  }
  if (r.custom->dimension() != c.dimension()) throw PreconditionError("custom recipe: dimension mismatch");
  Configuration out = c;
  for (const Point& p : r.custom->points()) {
    if (auto i = out.index_of(p.label)) {
      const Point& q = out.points()[*i];
      for (std::size_t k = 0; k < p.coords.size(); ++k) {
        if (compare(p.coords[k], q.coords[k], budget) != Ordering::Equal) {
          throw PreconditionError("custom recipe: '" + p.label + "' already placed elsewhere");
        }
      }
    } else {
      out.add_point(p);
    }
  }
  for (const LabelPair& e : r.custom->unit_edges()) {
    if (!out.has_edge(e.first, e.second)) out.add_edge(e.first, e.second);
  }
  declare_units(out, budget);
  return out;
}

namespace {

struct VecKey {
  std::size_t operator()(const Vec2& v) const { return v.x.hash() * 1000003ULL ^ v.y.hash(); }
};

}  // namespace

std::vector<ClosurePoint> constructible_closure(const Configuration& c, int depth, std::size_t cap, int budget) {
  std::vector<ClosurePoint> out;
  if (depth <= 0) return out;
  std::vector<Vec2> pool;
  std::vector<std::string> names;
  std::unordered_map<Vec2, std::size_t, VecKey> seen;
  for (const Point& p : c.points()) {
    Vec2 v = pos(c, p.label);
    seen.emplace(v, pool.size());
    pool.push_back(v);
    names.push_back(p.label);
  }
  std::size_t counter = 0;
  std::size_t frontier = 0;
  for (int level = 1; level <= depth; ++level) {
    std::size_t end = pool.size();
    for (std::size_t j = frontier; j < end; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        CircleIntersection hit = intersect_unit_circles(pool[i], pool[j], budget);
        if (hit.kind == IntersectionKind::Undecided) {
          throw PreconditionError("constructible_closure: intersection undecided within the precision budget");
        }
        for (const Vec2& v : hit.points) {
          if (seen.count(v)) continue;
          if (out.size() >= cap) {
            throw ClosureBudgetExceeded("constructible_closure: more than " + std::to_string(cap) + " candidates");
          }
          std::string label;
          do {
            label = "c" + std::to_string(++counter);
          } while (c.contains(label));
          seen.emplace(v, pool.size());
          pool.push_back(v);
          names.push_back(label);
          out.push_back(ClosurePoint{Point{label, to_coords(v)}, names[i], names[j], level});
        }
      }
    }
    frontier = end;
    if (frontier == pool.size()) break;
  }
  return out;
}

Configuration adjoin(const Configuration& c, const ClosurePoint& p, int budget) {
  Configuration out = c;
  std::vector<std::string> to;
  if (c.contains(p.parent_first)) to.push_back(p.parent_first);
  if (c.contains(p.parent_second)) to.push_back(p.parent_second);
  place(out, exact_vec2(p.point.coords), p.point.label, to);
  declare_units(out, budget);
  return out;
}

namespace {

struct Score {
  std::size_t cardinality = 0;
  double max_deviation = 0.0;
  bool proven = false;
  bool usable = false;
};

CReal claim_quantity(const Claim& claim, const PlacementSolution& s) {
  if (const auto* k = std::get_if<CongruenceClaim>(&claim)) {
    return distance(s.point(k->k), s.point(k->l)) - distance(s.point(k->m), s.point(k->n));
  }
  auto labels = claim_labels(claim);
  return distance(s.point(labels[0]), s.point(labels[1]));
}

Score score(const Configuration& c, const Claim& claim, int precision) {
  Score out;
  VerifyReport r = verify_detailed(c, claim, precision);
  if (!r.enumeration) return out;
  out.usable = true;
  out.proven = r.verdict.outcome == Outcome::Proven;
  Configuration classified = claim_mode(claim) == Mode::Weak ? classify_pairs(c, precision) : c;
  std::vector<CReal> values;
  for (const PlacementSolution& s : r.enumeration->solutions) {
    if (claim_mode(claim) == Mode::Weak && weak_admissible(classified, s, precision) != Check::Holds) continue;
    CReal q = claim_quantity(claim, s);
    bool fresh = true;
    for (const CReal& v : values) {
      if (compare(q, v, precision) == Ordering::Equal) {
        fresh = false;
        break;
      }
    }
    if (fresh) values.push_back(q);
    out.max_deviation = std::max(out.max_deviation, deviation(c, claim, s).approx());
  }
  out.cardinality = values.size();
  return out;
}

std::string signature(const Configuration& c) {
  std::vector<std::string> parts;
  for (const Point& p : c.points()) parts.push_back(p.coords[0].to_string() + "," + p.coords[1].to_string());
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += p + ";";
  return s;
}

Spectrum claim_spectrum(const Configuration& c, const Claim& claim, int precision) {
  auto labels = claim_labels(claim);
  return spectrum(c, labels[0], labels[1], claim_mode(claim), precision);
}

}  // namespace

SearchResult search_witness(const Configuration& c, const Claim& claim, const SearchBudget& budget, int precision) {
  require_labels(c, claim);
  require_valid(c, precision);
  SearchResult result;
  Score root = score(c, claim, precision);
  result.explored = 1;
  if (!root.usable) {
    result.note = "configuration is not enumerable";
    result.best_spectrum = claim_spectrum(c, claim, precision);
    return result;
  }
  if (root.proven) {
    result.success = true;
    result.witness = c;
    result.best_spectrum = claim_spectrum(c, claim, precision);
    return result;
  }

  struct State {
    Score score;
    long id;
    int added;
    Configuration config;
  };
  auto worse = [](const State& a, const State& b) {
    if (a.score.cardinality != b.score.cardinality) return a.score.cardinality > b.score.cardinality;
    if (a.score.max_deviation != b.score.max_deviation) return a.score.max_deviation > b.score.max_deviation;
    return a.id > b.id;
  };
  std::priority_queue<State, std::vector<State>, decltype(worse)> open(worse);
  std::set<std::string> visited{signature(c)};
  long next_id = 0;
  State best{root, next_id++, 0, c};
  open.push(best);
  auto better = [&](const State& a) { return worse(best, a); };

  while (!open.empty() && result.explored < budget.max_states) {
    State s = open.top();
    open.pop();
    if (s.added >= budget.max_added) continue;
    std::vector<ClosurePoint> cands;
    try {
      cands = constructible_closure(s.config, 1, budget.cap, precision);
    } catch (const ClosureBudgetExceeded& e) {
      result.note = e.what();
      continue;
    }
    for (const ClosurePoint& cp : cands) {
      if (result.explored >= budget.max_states) break;
      Configuration child = adjoin(s.config, cp, precision);
      if (!visited.insert(signature(child)).second) continue;
      ++result.explored;
      Score sc = score(child, claim, precision);
      if (!sc.usable) continue;
      State st{sc, next_id++, s.added + 1, std::move(child)};
      if (sc.proven) {
        result.success = true;
        result.witness = st.config;
        result.best_added = st.added;
        result.best_spectrum = claim_spectrum(st.config, claim, precision);
        return result;
      }
      if (better(st)) best = st;
      open.push(std::move(st));
    }
  }
  result.best_added = best.added;
  result.best_spectrum = claim_spectrum(best.config, claim, precision);
  if (result.note.empty()) result.note = "search budget exhausted";
  return result;
}

SearchResult search_witness(const Configuration& c, const std::string& x, const std::string& y,
                            const SearchBudget& budget, int precision) {
  return search_witness(c, DistanceClaim{x, y, Mode::Strong}, budget, precision);
}

EpsilonWitness build_epsilon_witness(const Configuration& c, const std::string& x, const std::string& y,
                                     const CReal& epsilon, const SearchBudget& budget, int precision) {
  if (compare(epsilon, CReal(0L), precision) != Ordering::Greater) {
    throw PreconditionError("build_epsilon_witness: epsilon must be certified positive");
  }
  Claim claim = EpsilonClaim{x, y, epsilon};
  require_labels(c, claim);
  require_valid(c, precision);
  auto proven = [&](const Configuration& t) { return verify(t, claim, precision).outcome == Outcome::Proven; };
  if (proven(c)) return {c, "given"};

  std::optional<Configuration> chained;
  CReal d = distance(c.point(x), c.point(y));
  if (d.is_exact() && !d.exact().is_zero()) {
    long k = ceil(d.exact()).get_si();
    try {
      chained = build_chain(c, x, y, static_cast<int>(std::max(1L, k)), "Z", precision);
    } catch (const PreconditionError&) {
    }
    if (chained && proven(*chained)) return {*chained, "chain"};
  }

  const Configuration* seeds[] = {&c, chained ? &*chained : nullptr};
  for (const Configuration* seed : seeds) {
    if (!seed) continue;
    SearchResult r = search_witness(*seed, claim, budget, precision);
    if (r.success && proven(*r.witness)) return {*r.witness, "search"};
  }
  throw NoVerifiedConstruction("no verified construction for " + to_string(claim));
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
  std::vector<CatalogEntry> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    const std::filesystem::path& p = entry.path();
    std::string name = p.filename().string();
    if (p.extension() != ".json" || name.ends_with(".spectrum.json")) continue;
    CatalogEntry e{p.stem().string(), p, load_configuration(p), nullptr};
    std::filesystem::path spec = p.parent_path() / (e.name + ".spectrum.json");
    if (std::filesystem::exists(spec)) {
      std::ifstream in(spec);
      try {
        e.expected = Json::parse(in);
      } catch (const Json::exception& ex) {
        throw InputError(spec.string() + ": " + ex.what());
      }
    }
    out.push_back(std::move(e));
  }
  if (ec) throw InputError("catalog directory '" + dir.string() + "': " + ec.message());
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace udrig
