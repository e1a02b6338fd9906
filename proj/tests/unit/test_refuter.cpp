#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "udrig/refuter.hpp"

using namespace udrig;
using testing::gadget;

TEST_CASE("parameter validation") {
  RefuterParams p;
  CHECK_NOTHROW(p.validate());
  p.restarts = 0;
  CHECK_THROWS_AS(p.validate(), PreconditionError);
  p = {};
  p.residual_tol = 1e-3;
  CHECK_THROWS_AS(p.validate(), PreconditionError);
  p = {};
  p.deviation_tol = -1;
  CHECK_THROWS_AS(p.validate(), PreconditionError);
}

TEST_CASE("linkage bound is the unit-graph distance") {
  CHECK(compare(linkage_bound(gadget("triangle_strip"), "X", "Y"), CReal(2L)) == Ordering::Equal);
  CHECK(compare(linkage_bound(gadget("moser_spindle"), "A", "D1"), CReal(2L)) == Ordering::Equal);
  Configuration c = gadget("unit_edge");
  c.add_point({"Z", {CReal(5L), CReal(0L)}});
  CHECK_THROWS_AS(linkage_bound(c, "X", "Z"), PreconditionError);
}

TEST_CASE("the hinged 2-chain folds away from 3/2") {
  Configuration c = gadget("chain2");
  Claim claim = parse_claim("star:X,Y");
  Verdict v = refute(c, claim, RefuterParams{});
  REQUIRE(v.outcome == Outcome::Refuted);
  REQUIRE(v.witness);
  CHECK(v.witness->is_exact());
  CHECK(evaluate(c, claim, *v.witness) == Check::Violated);
  double d = distance(v.witness->point("X"), v.witness->point("Y")).approx();
  CHECK(std::abs(d - 1.5) > 0.2);
  REQUIRE(v.evidence);
  CHECK(v.evidence->residual < 1e-12);
  CHECK(verify_or_refute(c, claim).outcome == Outcome::Refuted);
}

TEST_CASE("serial and parallel kernels agree exactly") {
  Configuration c = gadget("triangle_strip");
  auto problem = kernel::make_problem(c, parse_claim("star:X,Y"));
  RefuterParams p;
  p.restarts = 24;
  p.seed = 99;
  kernel::Candidate s = kernel::search_serial(problem, p);
  kernel::Candidate q = kernel::search_parallel(problem, p);
  CHECK(s.x == q.x);
  CHECK(s.restart == q.restart);
  CHECK(s.residual == q.residual);
  kernel::Candidate again = kernel::search_serial(problem, p);
  CHECK(again.x == s.x);
}

TEST_CASE("restarts depend on the seed") {
  Configuration c = gadget("chain2");
  auto problem = kernel::make_problem(c, parse_claim("star:X,Y"));
  RefuterParams a, b;
  b.seed = 1;
  CHECK(kernel::run_restart(problem, a, 0).x != kernel::run_restart(problem, b, 0).x);
  CHECK(kernel::run_restart(problem, a, 3).x == kernel::run_restart(problem, a, 3).x);
}

TEST_CASE("true claims are never refuted") {
  for (const char* claim : {"star:P,Q", "star:P,R", "diamond:P,Q,Q,R"}) {
    Verdict v = refute(gadget("unit_triangle"), parse_claim(claim));
    CHECK(v.outcome == Outcome::Undecided);
  }
  Verdict w = refute(gadget("moser_spindle"), parse_claim("star:A,D1"));
  CHECK(w.outcome != Outcome::Refuted);
  CHECK(w.outcome != Outcome::Proven);
}

TEST_CASE("refuted results carry exact violating witnesses") {
  Configuration c = gadget("rhombus");
  for (const char* text : {"star:A,C", "eps:A,C,1"}) {
    Claim claim = parse_claim(text);
    Verdict v = refute(c, claim);
    CHECK(v.outcome != Outcome::Proven);
    if (v.outcome == Outcome::Refuted) {
      REQUIRE(v.witness);
      CHECK(evaluate(c, claim, *v.witness) == Check::Violated);
    }
  }
}
