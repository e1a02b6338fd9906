#include "doctest.h"
#include "support.hpp"
#include "udrig/claim.hpp"
#include "udrig/placement.hpp"

using namespace udrig;
using testing::gadget;
using testing::te;

namespace {

std::string message_of(const std::string& text) {
  try {
    parse_configuration(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("malformed input names the offending field") {
  CHECK(message_of("{\"unit_edges\": []}").find("points") != std::string::npos);
  CHECK(message_of(R"({"points": [{"label": "X", "coords": ["0"]}], "unit_edges": []})").find("coords") !=
        std::string::npos);
  CHECK(message_of(R"({"points": [{"label": "X", "coords": ["0", "sqrt("]}], "unit_edges": []})")
            .find("points[0].coords[1]") != std::string::npos);
  CHECK(message_of(R"({"points": [{"label": "X", "coords": ["0", "0"]}], "unit_edges": [["X", "Q"]]})")
            .find("unit_edges[0]") != std::string::npos);
  CHECK_FALSE(message_of("{not json").empty());
}

TEST_CASE("duplicate labels and self-loops are rejected") {
  Configuration c;
  c.add_point({"X", {CReal(0L), CReal(0L)}});
  CHECK_THROWS_AS(c.add_point({"X", {CReal(1L), CReal(0L)}}), InputError);
  CHECK_THROWS_AS(c.add_edge("X", "X"), InputError);
  CHECK_THROWS_AS(c.point("nope"), PreconditionError);
}

TEST_CASE("pair classification and validation") {
  Configuration r = classify_pairs(gadget("rhombus"));
  CHECK(r.pair_table().at(LabelPair::of("A", "C")) == PairClass::NonUnit);
  CHECK(r.pair_table().at(LabelPair::of("A", "B")) == PairClass::Unit);
  CHECK(validate(r).valid());

  Configuration missing = gadget("unit_triangle");
  Configuration bare(2);
  for (const Point& p : missing.points()) bare.add_point(p);
  bare.add_edge("P", "Q");
  ValidationReport v = validate(bare);
  CHECK_FALSE(v.valid());
  CHECK(v.undeclared_unit.size() == 2);
  CHECK_THROWS_AS(require_valid(bare), PreconditionError);

  Configuration wrong(2);
  wrong.add_point({"X", {CReal(0L), CReal(0L)}});
  wrong.add_point({"Y", {CReal(2L), CReal(0L)}});
  wrong.add_edge("X", "Y");
  CHECK(validate(wrong).uncertified_edges.size() == 1);
}

TEST_CASE("configurations round-trip through JSON") {
  for (const char* name : {"rhombus", "moser_spindle", "hexagon_wheel", "chain2"}) {
    Configuration c = gadget(name);
    std::string once = print_configuration(c);
    Configuration back = parse_configuration(once);
    CHECK(print_configuration(back) == once);
    REQUIRE(back.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(back.points()[i].label == c.points()[i].label);
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(back.points()[i].coords[k].exact() == c.points()[i].coords[k].exact());
      }
    }
    CHECK(back.unit_edges() == c.unit_edges());
  }
}

TEST_CASE("decimal coordinates are read as exact rationals") {
  Configuration c = parse_configuration(
      R"({"points": [{"label": "X", "coords": ["0", "0"]}, {"label": "Y", "coords": ["0.6", "0.8"]}],
          "unit_edges": [["X", "Y"]]})");
  CHECK(validate(c).valid());
}

TEST_CASE("unit graph distances") {
  Configuration s = gadget("triangle_strip");
  CHECK(unit_graph_distance(s, "X", "Y") == 2);
  CHECK(unit_graph_distance(s, "X", "X") == 0);
  CHECK(unit_graph_diameter(s) == 2);
  Configuration sub = induced(s, {"X", "Y"});
  CHECK_FALSE(unit_graph_distance(sub, "X", "Y").has_value());
}

TEST_CASE("claims parse and print") {
  CHECK(to_string(parse_claim("star:X,Y")) == "star:X,Y");
  CHECK(to_string(parse_claim("wdiamond:K,L,M,N")) == "wdiamond:K,L,M,N");
  Claim e = parse_claim("eps:A,C,sqrt(3)");
  CHECK(std::get<EpsilonClaim>(e).epsilon.exact() == te("sqrt(3)"));
  CHECK_THROWS_AS(parse_claim("star:X"), InputError);
  CHECK_THROWS_AS(parse_claim("bogus:X,Y"), InputError);
  CHECK_THROWS_AS(require_labels(gadget("rhombus"), parse_claim("star:X,Y")), PreconditionError);
}

TEST_CASE("canonical framing") {
  Configuration c = gadget("rhombus");
  PlacementSolution s = canonical_frame(placement_of(c), "D", "B");
  CHECK(s.at("D")[0].exact().is_zero());
  CHECK(s.at("B")[0].exact() == TowerElem(1L));
  CHECK(s.at("A")[1].exact().sign() > 0);
}
