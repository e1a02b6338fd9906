// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "kits.hpp"
#include "support.hpp"
#include "udrig/combinator.hpp"
#include "udrig/congruence.hpp"
#include "udrig/enumerator.hpp"
#include "udrig/gadgets.hpp"
#include "udrig/refuter.hpp"

using namespace udrig;
using testing::gadget;
using testing::te;
namespace fs = std::filesystem;

namespace {

struct Outcome_ {
  bool pass = true;
  std::string detail;
};

class Check_ {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      out_.pass = false;
      if (!out_.detail.empty()) out_.detail += "; ";
      out_.detail += what;
    }
  }
  void note(const std::string& what) { notes_ += (notes_.empty() ? "" : ", ") + what; }
  Outcome_ result() const {
    Outcome_ r = out_;
    if (r.pass) r.detail = notes_;
    return r;
  }

 private:
  Outcome_ out_;
  std::string notes_;
};

std::vector<TowerElem> exact_values(const Spectrum& s) {
  std::vector<TowerElem> v;
  for (const CReal& x : s.values) v.push_back(x.exact());
  return v;
}

Vec2 at(const PlacementSolution& s, const std::string& l) { return exact_vec2(s.at(l)); }

// 1. Rhombus dichotomy.
Outcome_ rhombus_dichotomy() {
  Check_ c;
  Configuration r = gadget("rhombus");
  Enumeration e = enumerate(r, find_order(r, "B", "D"));
  c.expect(e.solutions.size() == 2, "expected 2 solutions, got " + std::to_string(e.solutions.size()));
  Spectrum s = spectrum(r, "A", "C");
  c.expect(s.complete, "spectrum incomplete");
  c.expect(exact_values(s) == std::vector<TowerElem>{TowerElem(0L), te("sqrt(3)")}, "spectrum is not {0, sqrt(3)}");
  for (const CReal& v : s.values) {
    c.expect(v.interval().width() < pow2(-100), "enclosure of " + v.to_string() + " too wide");
  }
  if (s.values.size() == 2) c.expect(s.values[1].to_string() == "sqrt(3)", "normal form " + s.values[1].to_string());
  c.note("2 solutions, spectrum {0, sqrt(3)}");
  return c.result();
}

// 2. Strong vs weak semantics.
Outcome_ strong_vs_weak() {
  Check_ c;
  Configuration r = gadget("rhombus");
  Verdict strong = verify(r, parse_claim("star:A,C"));
  c.expect(strong.outcome == Outcome::Refuted, "strong verdict is " + to_string(strong.outcome));
  c.expect(strong.witness && at(*strong.witness, "A") == at(*strong.witness, "C"), "witness is not the collapse");
  Spectrum w = spectrum(r, "A", "C", Mode::Weak);
  c.expect(w.complete && exact_values(w) == std::vector<TowerElem>{te("sqrt(3)")}, "weak spectrum is not {sqrt(3)}");
  Verdict weak = verify(r, parse_claim("wstar:A,C"));
  c.expect(weak.outcome == Outcome::Proven, "weak verdict is " + to_string(weak.outcome));
  c.note("strong refuted by collapse, weak proven");
  return c.result();
}

// 3. Epsilon contract and its two corollaries over the catalog.
Outcome_ epsilon_contract() {
  Check_ c;
  Configuration r = gadget("rhombus");
  c.expect(verify(r, parse_claim("eps:A,C,sqrt(3)")).outcome == Outcome::Proven, "eps sqrt(3) not proven");
  c.expect(verify(r, parse_claim("eps:A,C,1")).outcome == Outcome::Refuted, "eps 1 not refuted");

  int distinct_checked = 0, nonunit_checked = 0;
  for (const CatalogEntry& entry : load_catalog(testing::gadget_dir())) {
    auto order = find_any_order(entry.config);
    if (!order) continue;
    Enumeration e = enumerate(entry.config, *order);
    const auto& pts = entry.config.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const std::string& x = pts[i].label;
        const std::string& y = pts[j].label;
        TowerElem d = TowerElem::sqrt(norm2(exact_vec2(pts[i].coords) - exact_vec2(pts[j].coords)));
        std::vector<TowerElem> eps{d / TowerElem(2L)};
        if (d != TowerElem(1L)) eps.push_back((d - TowerElem(1L)).abs() / TowerElem(2L));
        for (const TowerElem& ep : eps) {
          if (verify(entry.config, EpsilonClaim{x, y, CReal(ep)}).outcome != Outcome::Proven) continue;
          bool below_d = compare_exact(ep, d) < 0;
          bool below_gap = d != TowerElem(1L) && compare_exact(ep, (d - TowerElem(1L)).abs()) < 0;
          for (const PlacementSolution& s : e.solutions) {
            TowerElem img = norm2(at(s, x) - at(s, y));
            if (below_d) {
              c.expect(!img.is_zero(), entry.name + ": " + x + "," + y + " collapsed under a proven eps claim");
              ++distinct_checked;
            }
            if (below_gap) {
              c.expect(img != TowerElem(1L), entry.name + ": " + x + "," + y + " became unit under a proven eps claim");
              ++nonunit_checked;
            }
          }
        }
      }
    }
  }
  c.expect(distinct_checked > 0 && nonunit_checked > 0, "corollary sweep was vacuous");
  c.note(std::to_string(distinct_checked) + " distinctness and " + std::to_string(nonunit_checked) +
         " non-unit checks");
  return c.result();
}

// 4. Kit census with a recording stub.
Outcome_ kit_census() {
  Check_ c;
  struct Call {
    LabelPair pair;
    CReal eps;
  };
  std::vector<Call> calls;
  TBuilder stub = [&calls](const Configuration& src, const std::string& p, const std::string& q, const CReal& eps) {
    calls.push_back({LabelPair::of(p, q), eps});
    return induced(src, {p, q});
  };
  strengthen_star(gadget("unit_edge"), "X", "Y", stub);
  c.expect(calls.size() == 1 && calls[0].pair == LabelPair::of("X", "Y") &&
               calls[0].eps.exact() == TowerElem(Rational(1, 2)),
           "unit edge census");
  calls.clear();
  strengthen_star(gadget("unit_triangle"), "P", "Q", stub);
  c.expect(calls.size() == 3, "triangle census " + std::to_string(calls.size()));
  calls.clear();
  Strengthened rh = strengthen_star(gadget("rhombus"), "A", "C", stub);
  c.expect(calls.size() == 7 && rh.kits.size() == 7, "rhombus census " + std::to_string(calls.size()));
  int nonunit = 0;
  for (const KitRecord& k : rh.kits) {
    if (k.kind == KitKind::NonUnit) {
      ++nonunit;
      c.expect(k.epsilon.exact() == te("(sqrt(3) - 1)/2"), "non-unit epsilon " + k.epsilon.to_string());
    }
  }
  c.expect(nonunit == 1, "non-unit kits: " + std::to_string(nonunit));
  c.note("1 / 3 / 7 kits");
  return c.result();
}

// 5. Conditional soundness end to end.
Outcome_ conditional_soundness() {
  Check_ c;
  struct Instance {
    const char* gadget;
    const char* x;
    const char* y;
  };
  for (Instance in : {Instance{"unit_triangle", "P", "Q"}, Instance{"rhombus", "A", "C"}}) {
    Configuration s = gadget(in.gadget);
    std::string name = in.gadget;
    Claim weak = DistanceClaim{in.x, in.y, Mode::Weak};
    c.expect(verify(s, weak).outcome == Outcome::Proven, name + ": weak claim not proven");
    Strengthened out = strengthen_star(s, in.x, in.y, testing::spindle_tbuilder());
    // The builder verifies every kit; re-check them against the source pairs.
    for (const KitRecord& k : out.kits) {
      Verdict kv = verify(out.config, EpsilonClaim{k.pair.first, k.pair.second, k.epsilon});
      c.expect(kv.outcome == Outcome::Proven, name + ": kit claim on merged set " + to_string(kv.outcome));
    }
    Verdict v = verify(out.config, DistanceClaim{in.x, in.y, Mode::Strong});
    c.expect(v.outcome != Outcome::Refuted, name + ": strengthened set refuted");
    c.expect(v.outcome == Outcome::Proven, name + ": strengthened set " + to_string(v.outcome));
    c.note(name + " -> " + std::to_string(out.config.size()) + " points, strong proven");
  }
  return c.result();
}

// 6. Enumerator against the sampling oracle.
Outcome_ sampler_agreement() {
  Check_ c;
  constexpr int kRestarts = 100000;
  for (const CatalogEntry& entry : load_catalog(testing::gadget_dir())) {
    auto order = find_any_order(entry.config);
    bool expected_enumerable = entry.expected.is_null() ? true : entry.expected.value("enumerable", true);
    if (!order) {
      // A flexible gadget: the sampler must see a continuum.
      c.expect(!expected_enumerable, entry.name + ": no order but expected enumerable");
      const auto& e0 = entry.config.unit_edges().begin();
      oracle::Graph g = testing::to_graph(entry.config, e0->first, e0->second);
      auto res = oracle::sample_realizations(g, 2000, 1, unit_graph_diameter(entry.config) + 1.0);
      c.expect(res.clusters.size() > 500, entry.name + ": sampler found only " +
                                              std::to_string(res.clusters.size()) + " clusters");
      c.note(entry.name + " flexible");
      continue;
    }
    Enumeration e = enumerate(entry.config, *order);
    oracle::Graph g = testing::to_graph(entry.config, order->base_first, order->base_second);
    auto res = oracle::sample_realizations(g, kRestarts, 12345, unit_graph_diameter(entry.config) + 1.0);
    std::vector<std::vector<double>> exact;
    for (const PlacementSolution& s : e.solutions) {
      std::vector<double> v;
      for (const auto& p : s.coords()) {
        v.push_back(p[0].approx());
        v.push_back(p[1].approx());
      }
      exact.push_back(std::move(v));
    }
    c.expect(res.clusters.size() == exact.size(), entry.name + ": " + std::to_string(exact.size()) +
                                                      " enumerated vs " + std::to_string(res.clusters.size()) +
                                                      " sampled");
    for (const auto& cl : res.clusters) {
      bool matched = false;
      for (const auto& ex : exact) matched = matched || oracle::max_abs_diff(cl, ex) < 1e-9;
      c.expect(matched, entry.name + ": sampled cluster without exact match");
    }
    if (!entry.expected.is_null()) {
      c.expect(entry.expected.value("solution_count", -1) == static_cast<int>(exact.size()),
               entry.name + ": frozen solution count differs");
      for (const auto& [pair, values] : entry.expected["spectra"].items()) {
        auto comma = pair.find(',');
        Spectrum s = spectrum(entry.config, pair.substr(0, comma), pair.substr(comma + 1));
        auto want = values.get<std::vector<std::string>>();
        bool same = want.size() == s.values.size();
        for (std::size_t i = 0; same && i < want.size(); ++i) {
          same = s.values[i].exact() == TowerElem::parse(want[i]);
        }
        c.expect(same, entry.name + ": frozen spectrum of " + pair);
      }
    }
    c.note(entry.name + " " + std::to_string(exact.size()));
  }
  return c.result();
}

// 7. Refuter consistency.
Outcome_ refuter_consistency() {
  Check_ c;
  int pairs = 0, refuted = 0;
  RefuterParams params;
  params.restarts = 32;
  for (const CatalogEntry& entry : load_catalog(testing::gadget_dir())) {
    const auto& pts = entry.config.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        for (Mode m : {Mode::Strong, Mode::Weak}) {
          Claim claim = DistanceClaim{pts[i].label, pts[j].label, m};
          Verdict exact = verify(entry.config, claim);
          Verdict numeric = refute(entry.config, claim, params);
          ++pairs;
          if (numeric.outcome == Outcome::Refuted) ++refuted;
          c.expect(!(exact.outcome == Outcome::Proven && numeric.outcome == Outcome::Refuted),
                   entry.name + ": " + to_string(claim) + " proven and refuted");
          c.expect(numeric.outcome != Outcome::Proven, "refuter returned Proven");
        }
      }
    }
  }
  Configuration chain = gadget("chain2");
  Verdict v = refute(chain, parse_claim("star:X,Y"));
  c.expect(v.outcome == Outcome::Refuted, "2-chain not refuted");
  if (v.witness && v.evidence) {
    double d = distance(v.witness->point("X"), v.witness->point("Y")).approx();
    c.expect(std::abs(d - 1.5) > 0.2, "2-chain fold deviation " + std::to_string(std::abs(d - 1.5)));
    c.expect(v.evidence->residual < params.residual_tol, "2-chain residual too large");
    c.note("2-chain fold |d - 3/2| = " + std::to_string(std::abs(d - 1.5)));
  }
  c.note(std::to_string(pairs) + " claims, " + std::to_string(refuted) + " certified refutations");
  return c.result();
}

// 8. Spectrum bounds and monotonicity on random enumerable configurations.
Outcome_ monotonicity_and_bounds() {
  Check_ c;
  std::mt19937_64 rng(2024);
  int built = 0, compared = 0;
  auto pick_edge = [&](const Configuration& cfg) {
    std::vector<LabelPair> edges(cfg.unit_edges().begin(), cfg.unit_edges().end());
    return edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
  };
  auto grow = [&](const Configuration& cfg) {
    LabelPair e = pick_edge(cfg);
    Side side = rng() % 2 ? Side::Up : Side::Down;
    if (rng() % 3 == 0) {
      return attach_rhombus(cfg, e.first, e.second, cfg.fresh_label("R"), cfg.fresh_label("S"));
    }
    return attach_triangle(cfg, e.first, e.second, side, cfg.fresh_label("T"));
  };
  for (int attempt = 0; built < 20 && attempt < 200; ++attempt) {
    Configuration cfg = gadget("unit_edge");
    int steps = 2 + static_cast<int>(rng() % 3);
    for (int s = 0; s < steps; ++s) cfg = grow(cfg);
    if (!find_any_order(cfg)) continue;
    ++built;
    const auto& pts = cfg.points();
    std::size_t i = rng() % pts.size(), j = rng() % pts.size();
    if (i == j) j = (j + 1) % pts.size();
    std::string x = pts[i].label, y = pts[j].label;
    Spectrum s = spectrum(cfg, x, y);
    if (!s.complete) {
      c.expect(false, "random configuration with an order did not enumerate");
      continue;
    }
    CReal bound = linkage_bound(cfg, x, y);
    for (const CReal& v : s.values) c.expect(compare(v, bound) != Ordering::Greater, "value above linkage bound");
    Configuration ext = grow(cfg);
    Spectrum se = spectrum(ext, x, y);
    if (!se.complete) continue;
    ++compared;
    auto orig = exact_values(s);
    for (const TowerElem& v : exact_values(se)) {
      bool present = false;
      for (const TowerElem& o : orig) present = present || o == v;
      c.expect(present, "extension enlarged the spectrum of " + x + "," + y);
    }
  }
  c.expect(built == 20, "only " + std::to_string(built) + " random configurations");
  c.note(std::to_string(built) + " configurations, " + std::to_string(compared) + " extensions compared");
  return c.result();
}

// 9. Congruence truncations.
Outcome_ congruence_truncations() {
  Check_ c;
  auto point = [](const char* l, const Rational& x, const Rational& y) {
    return Point{l, {CReal(x), CReal(y)}};
  };
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-24, 24);
  std::uniform_int_distribution<long> den(1, 6);
  auto rnd = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  int decided = 0;
  for (int i = 0; i < 100; ++i) {
    TruncationQuery q;
    q.a = point("a", rnd(), rnd());
    q.b = point("b", rnd(), rnd());
    q.c = point("c", rnd(), rnd());
    q.d = point("d", rnd(), rnd());
    q.N = 8;
    q.denominator_bound = 64;
    TruncationResult r = truncated_equiv(q);
    for (const LevelResult& lv : r.levels) {
      bool sufficient = lv.simplest && lv.simplest->get_den() <= 64;
      if (lv.closed_form && sufficient) {
        c.expect(lv.search, "search missed a level the closed form accepts");
        ++decided;
      }
      if (!lv.closed_form) c.expect(!lv.search, "search found a witness the closed form rejects");
      if (lv.search && lv.witness) {
        TowerElem rr(lv.witness->r), inv(Rational(1, lv.n));
        c.expect(norm2(lv.witness->x - exact_vec2(q.a.coords)) == rr * rr &&
                     norm2(lv.witness->x - exact_vec2(q.b.coords)) == inv * inv &&
                     norm2(lv.witness->y - exact_vec2(q.c.coords)) == rr * rr &&
                     norm2(lv.witness->y - exact_vec2(q.d.coords)) == inv * inv,
                 "unsound witness");
      }
    }
  }
  TruncationQuery p;
  p.a = point("a", 0, 0);
  p.b = point("b", 1, 0);
  p.c = point("c", 0, 2);
  p.d = point("d", Rational(3, 2), 2);
  p.N = 5;
  TruncationResult r = truncated_equiv(p);
  bool through4 = true;
  for (int n = 0; n < 4; ++n) through4 = through4 && r.levels[n].closed_form && r.levels[n].search;
  c.expect(through4, "1 vs 3/2 fails before n = 5");
  c.expect(!r.levels[4].closed_form && r.first_failure == 5, "1 vs 3/2 does not fail at n = 5");
  p.d = point("d", Rational(3, 5), Rational(14, 5));
  p.N = 50;
  TruncationResult cong = truncated_equiv(p);
  c.expect(cong.closed_form && cong.search, "congruent pair fails before N = 50");
  c.note(std::to_string(decided) + " decided levels agree");
  return c.result();
}

// 10. Determinism of the CLI suite.
std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome_ cli_determinism() {
  Check_ c;
  fs::path data(UDRIG_DATA_DIR);
  auto g = [&](const char* n) { return (data / "gadgets" / (std::string(n) + ".json")).string(); };
  std::vector<std::pair<std::string, std::string>> suite{
      {"validate", "validate " + g("moser_spindle")},
      {"enumerate", "enumerate " + g("hexagon_wheel")},
      {"spectrum", "spectrum --pair A,C " + g("rhombus")},
      {"verify", "verify --claim star:A,C " + g("rhombus")},
      {"verify_flex", "verify --claim star:X,Y --seed 7 " + g("chain2")},
      {"refute", "refute --claim star:X,Y --seed 11 --restarts 32 " + g("chain2")},
      {"build", "build " + (data / "recipes" / "ab_edge.json").string() + " --recipe " +
                    (data / "recipes" / "moser_spindle.json").string()},
      {"strengthen", "strengthen --claim star:P,Q " + g("unit_triangle")},
      {"closure", "closure --depth 2 " + g("unit_edge")},
      {"search", "search --pair X,Y --budget 20 " + g("chain2")},
      {"congruence", "congruence --N 6 " + (data / "congruence" / "one_vs_three_halves.json").string()},
  };
  fs::path root = fs::temp_directory_path() / ("udrig_acceptance_" + std::to_string(::getpid()));
  for (int pass = 0; pass < 2; ++pass) {
    fs::create_directories(root / std::to_string(pass));
    for (const auto& [name, args] : suite) {
      fs::path out = root / std::to_string(pass) / (name + ".json");
      std::string cmd = std::string(UDRIG_CLI_PATH) + " " + args + " --out " + out.string() + " > /dev/null 2>&1";
      int status = std::system(cmd.c_str());
      c.expect(WIFEXITED(status) && WEXITSTATUS(status) != 3, name + ": usage error");
    }
  }
  for (const auto& [name, args] : suite) {
    std::string a = slurp(root / "0" / (name + ".json"));
    std::string b = slurp(root / "1" / (name + ".json"));
    c.expect(!a.empty(), name + ": empty report");
    c.expect(a == b, name + ": reports differ");
  }
  fs::remove_all(root);
  c.note(std::to_string(suite.size()) + " reports byte-identical");
  return c.result();
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome_()>>> criteria{
      {"rhombus dichotomy", rhombus_dichotomy},
      {"strong vs weak semantics", strong_vs_weak},
      {"epsilon contract", epsilon_contract},
      {"kit census", kit_census},
      {"conditional soundness", conditional_soundness},
      {"enumerator vs sampling oracle", sampler_agreement},
      {"refuter consistency", refuter_consistency},
      {"monotonicity and bounds", monotonicity_and_bounds},
      {"congruence truncation", congruence_truncations},
      {"determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome_ r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += r.pass ? 0 : 1;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (r.pass ? "PASS" : "FAIL") << " ("
              << r.detail << ") " << static_cast<int>(secs) << "s" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
