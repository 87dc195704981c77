#include <doctest.h>

#include <random>

#include "biq/constructors.hpp"
#include "biq/error.hpp"
#include "biq/identity.hpp"
#include "biq/properties.hpp"
#include "malformed_identities.hpp"
#include "oracles.hpp"

using namespace biq;


TEST_CASE("twenty malformed identities are rejected with their position") {
  static_assert(std::size(kMalformedIdentities) == 20);
  for (const auto& [text, position] : kMalformedIdentities) {
    CAPTURE(text);
    try {
      parse_identity(text);
      FAIL("accepted malformed input");
    } catch (const ParseError& e) {
      CHECK(e.position() == position);
      CHECK(std::string(e.what()).starts_with("column " + std::to_string(position + 1) + ":"));
    }
  }
}

TEST_CASE("builtins round trip through render and parse") {
  const Builtin all[] = {Builtin::e1, Builtin::e2, Builtin::e3, Builtin::e4, Builtin::e5,
                         Builtin::e6, Builtin::e7, Builtin::e8, Builtin::e9, Builtin::medial_circ,
                         Builtin::medial_star, Builtin::paramedial_circ, Builtin::paramedial_star,
                         Builtin::left_modular};
  for (const Builtin b : all) {
    CAPTURE(to_string(b));
    const Equation eq = builtin(b);
    const Equation again = parse_identity(render(eq));
    CHECK(again.lhs == eq.lhs);
    CHECK(again.rhs == eq.rhs);
    CHECK(render(again) == render(eq));
    CHECK(parse_builtin(to_string(b)) == b);
  }
}

TEST_CASE("rendering is fully parenthesized") {
  CHECK(render(builtin(Builtin::e2)) == "((x o z) * (y o z)) = (x * y)");
  CHECK(render(parse_identity("x=x")) == "x = x");
  CHECK(render(parse_identity("(x o z) o (y o z) = x o y")) == render(builtin(Builtin::e1)));
  CHECK(render(parse_identity(" ( x*y ) o\tz = u ")) == "((x * y) o z) = u");
}

TEST_CASE("identity names resolve") {
  CHECK(render(resolve_identity("medial")) == render(builtin(Builtin::medial_circ)));
  CHECK(render(resolve_identity("leftmod")) == render(builtin(Builtin::left_modular)));
  CHECK(render(resolve_identity("custom:x o y = y o x")) == "(x o y) = (y o x)");
  CHECK_THROWS_AS(resolve_identity("e10"), Error);
  CHECK_THROWS_AS(resolve_identity("custom:x o"), ParseError);
}

TEST_CASE("vars are listed in x, y, z, u, w order") {
  const Equation eq = parse_identity("(w o z) * (u o y) = x");
  CHECK(eq.vars == std::vector<Var>{Var::x, Var::y, Var::z, Var::u, Var::w});
  CHECK(builtin(Builtin::e1).vars == std::vector<Var>{Var::x, Var::y, Var::z});
}

TEST_CASE("check agrees with a direct triple loop on random pairs") {
  std::mt19937 rng(20261018);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 1 + round % 7;
    const CayleyTable circ = oracle::random_latin(n, rng);
    const CayleyTable star = oracle::random_latin(n, rng);
    for (std::size_t k = 0; k < 9; ++k) {
      const Equation eq = builtin(ward_identities()[k]);
      const auto shape = oracle::ward_shapes()[k];
      const CheckResult r = check_tables(circ, star, eq);
      CHECK(r.holds == oracle::ward_holds(circ, star, shape));
      const auto first = oracle::ward_first_failure(circ, star, shape);
      REQUIRE(r.counterexample.has_value() == first.has_value());
      if (first) {
        const auto& ce = *r.counterexample;
        REQUIRE(ce.assignment.size() == 3);
        CHECK(ce.assignment[0] == std::pair{Var::x, (*first)[0]});
        CHECK(ce.assignment[1] == std::pair{Var::y, (*first)[1]});
        CHECK(ce.assignment[2] == std::pair{Var::z, (*first)[2]});
        CHECK(ce.lhs_value != ce.rhs_value);
      }
    }
  }
}

TEST_CASE("ward pairs of groups satisfy e1 and refute nothing they should not") {
  for (const auto& name : catalog_groups()) {
    const FiniteGroup g = catalog(name);
    const CayleyTable w = ward_from_group(g);
    for (std::size_t k = 0; k < 9; ++k) {
      CHECK(check_tables(w, w, builtin(ward_identities()[k])).holds ==
            oracle::ward_holds(w, w, oracle::ward_shapes()[k]));
    }
    CHECK(check_tables(w, w, builtin(Builtin::e1)).holds);
  }
}

TEST_CASE("four-variable identities agree with direct loops") {
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    const CayleyTable t = oracle::random_latin(1 + round % 5, rng);
    CHECK(check_tables(t, t, builtin(Builtin::medial_circ)).holds == oracle::medial(t));
    CHECK(check_tables(t, t, builtin(Builtin::paramedial_circ)).holds == oracle::paramedial(t));
  }
}

TEST_CASE("z3 addition refutes e1 at x=0, y=0, z=1") {
  const CayleyTable z3 = oracle::zn_add(3);
  const CheckResult r = check(Biquasigroup(z3, z3), builtin(Builtin::e1));
  REQUIRE_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->assignment ==
        std::vector<std::pair<Var, Element>>{{Var::x, 0}, {Var::y, 0}, {Var::z, 1}});
  CHECK(r.counterexample->lhs_value == 2);
  CHECK(r.counterexample->rhs_value == 0);

  const CayleyTable z2 = oracle::zn_add(2);
  CHECK(check(Biquasigroup(z2, z2), builtin(Builtin::e1)).holds);
}

TEST_CASE("term evaluation") {
  const CayleyTable z5 = oracle::zn_add(5);
  const CayleyTable sub = CayleyTable::generate(5, [](Element x, Element y) { return (x + 5 - y) % 5; });
  const Equation eq = parse_identity("(x o y) * z = x");
  const Assignment a = {{Var::x, 1}, {Var::y, 3}, {Var::z, 4}};
  CHECK(eval_term(eq.lhs, z5, sub, a) == (1 + 3 + 5 - 4) % 5);
  CHECK_THROWS_AS(eval_term(eq.lhs, z5, sub, {{Var::x, 1}}), Error);
}
