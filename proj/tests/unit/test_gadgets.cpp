#include "doctest.h"
#include "support.hpp"
#include "udrig/gadgets.hpp"

using namespace udrig;
using testing::gadget;
using testing::te;

namespace {

TowerElem dist2(const Configuration& c, const std::string& a, const std::string& b) {
  return norm2(exact_vec2(c.point(a).coords) - exact_vec2(c.point(b).coords));
}

Configuration pair_at(const char* dx) {
  Configuration c(2);
  c.add_point({"X", {CReal(0L), CReal(0L)}});
  c.add_point({"Y", {CReal(te(dx)), CReal(0L)}});
  return c;
}

}  // namespace

TEST_CASE("triangles and rhombi") {
  Configuration e = gadget("unit_edge");
  Configuration t = attach_triangle(e, "X", "Y", Side::Up);
  CHECK(t.size() == 3);
  CHECK(t.point("T").coords[1].exact() == te("sqrt(3)/2"));
  CHECK(t.has_edge("T", "X"));
  CHECK(validate(t).valid());
  Configuration down = attach_triangle(e, "X", "Y", Side::Down, "U");
  CHECK(down.point("U").coords[1].exact() == te("-sqrt(3)/2"));
  CHECK_THROWS_AS(attach_triangle(pair_at("3"), "X", "Y", Side::Up), PreconditionError);
  CHECK_THROWS_AS(parse_side("left"), InputError);

  Configuration r = attach_rhombus(e, "X", "Y");
  CHECK(r.size() == 4);
  CHECK(dist2(r, "A", "C") == TowerElem(3L));
  CHECK(validate(r).valid());
}

TEST_CASE("reattaching on the same side reuses the apex") {
  Configuration t = attach_triangle(gadget("unit_edge"), "X", "Y", Side::Up);
  Configuration again = attach_triangle(t, "Y", "X", Side::Down, "T2");
  CHECK(again.size() == 3);
}

TEST_CASE("chains") {
  Configuration two = build_chain(pair_at("3/2"), "X", "Y", 2);
  CHECK(two.size() == 3);
  CHECK(validate(two).valid());
  Configuration cat = gadget("chain2");
  CHECK(exact_vec2(two.points()[2].coords) == exact_vec2(cat.point("Z").coords));

  Configuration three = build_chain(pair_at("5/2"), "X", "Y", 3);
  CHECK(three.size() == 4);
  CHECK(validate(three).valid());
  CHECK(unit_graph_distance(three, "X", "Y") == 3);

  Configuration four = build_chain(pair_at("1"), "X", "Y", 4);
  CHECK(validate(four).valid());
  CHECK(unit_graph_distance(four, "X", "Y") <= 4);

  CHECK_THROWS_AS(build_chain(pair_at("3"), "X", "Y", 2), PreconditionError);
  CHECK_THROWS_AS(build_chain(pair_at("1/2"), "X", "Y", 1), PreconditionError);
}

TEST_CASE("spindle") {
  Configuration s = build_spindle(gadget("unit_edge"), "X", "Y");
  CHECK(s.size() == 7);
  CHECK(s.unit_edges().size() == 11);
  CHECK(validate(s).valid());
  Configuration cat = gadget("moser_spindle");
  CHECK(cat.unit_edges().size() == 11);
  CHECK(validate(cat).valid());
}

TEST_CASE("recipes") {
  Json j = Json::parse(R"({"kind": "rhombus", "labels": ["X", "Y"], "names": ["L", "R"], "provenance": "test"})");
  GadgetRecipe r = recipe_from_json(j);
  CHECK(r.kind == GadgetRecipe::Kind::Rhombus);
  Configuration out = apply_recipe(gadget("unit_edge"), r);
  CHECK(out.contains("L"));
  CHECK(out.contains("R"));
  CHECK_THROWS_AS(recipe_from_json(Json::parse(R"({"kind": "pentagon"})")), InputError);
  CHECK_THROWS_AS(recipe_from_json(Json::parse(R"({"kind": "chain", "labels": ["X"]})")), InputError);
}

TEST_CASE("constructible closure") {
  Configuration e = gadget("unit_edge");
  auto one = constructible_closure(e, 1);
  CHECK(one.size() == 2);
  for (const auto& p : one) {
    CHECK(p.depth == 1);
    CHECK(p.point.coords[0].exact() == te("1/2"));
  }
  auto two = constructible_closure(e, 2);
  CHECK(two.size() > one.size());
  for (const auto& p : two) {
    if (p.depth != 2) continue;
    Configuration grown = adjoin(adjoin(e, one[0]), one[1]);
    CHECK(validate(adjoin(grown, p)).valid());
  }
  CHECK_THROWS_AS(constructible_closure(e, 3, 4), ClosureBudgetExceeded);
  CHECK(constructible_closure(e, 0).empty());
}

TEST_CASE("epsilon witness cascade") {
  EpsilonWitness given = build_epsilon_witness(gadget("unit_edge"), "X", "Y", CReal(Rational(1, 2)));
  CHECK(given.strategy == "given");
  EpsilonWitness chained = build_epsilon_witness(pair_at("3/2"), "X", "Y", CReal(Rational(3, 2)));
  CHECK(chained.strategy == "chain");
  CHECK(verify(chained.config, EpsilonClaim{"X", "Y", CReal(Rational(3, 2))}).outcome == Outcome::Proven);
  SearchBudget tiny;
  tiny.max_states = 3;
  CHECK_THROWS_AS(build_epsilon_witness(pair_at("3/2"), "X", "Y", CReal(Rational(1, 10)), tiny),
                  NoVerifiedConstruction);
}

TEST_CASE("witness search") {
  SearchResult done = search_witness(gadget("unit_triangle"), "P", "Q", SearchBudget{});
  CHECK(done.success);
  CHECK(done.best_added == 0);
  SearchBudget small;
  small.max_states = 5;
  SearchResult chain = search_witness(gadget("chain2"), "X", "Y", small);
  CHECK(chain.explored <= 5);
  if (chain.success) {
    CHECK(verify(*chain.witness, parse_claim("star:X,Y")).outcome == Outcome::Proven);
  } else {
    CHECK_FALSE(chain.note.empty());
  }
}

TEST_CASE("catalog") {
  auto cat = load_catalog(testing::gadget_dir());
  REQUIRE(cat.size() == 7);
  CHECK(cat.front().name == "chain2");
  for (const auto& e : cat) {
    CAPTURE(e.name);
    CHECK(validate(e.config).valid());
  }
}
