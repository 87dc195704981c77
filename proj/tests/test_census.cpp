#include <doctest.h>

#include <set>

#include "biq/census.hpp"
#include "biq/constructors.hpp"
#include "biq/error.hpp"
#include "biq/properties.hpp"
#include "oracles.hpp"

using namespace biq;

namespace {

FiniteGroup group(const char* name) { return catalog(parse_group_name(name)); }

// Independent census: automorphisms by brute force, tables by direct
// evaluation, identities by triple loops.
std::size_t naive_census(const CayleyTable& g, oracle::WardShape shape, bool circ_only) {
  const auto auts = oracle::automorphisms(g);
  const Element n = static_cast<Element>(g.order());
  std::vector<CayleyTable> ops;
  for (const auto& l : auts)
    for (const auto& r : auts)
      for (Element c = 0; c < n; ++c)
        ops.push_back(CayleyTable::generate(n, [&](Element x, Element y) { return g(g(l[x], c), r[y]); }));
  std::size_t count = 0;
  for (const auto& circ : ops) {
    if (circ_only) {
      count += oracle::ward_holds(circ, circ, shape);
      continue;
    }
    for (const auto& star : ops) count += oracle::ward_holds(circ, star, shape);
  }
  return count;
}

}  // namespace

TEST_CASE("spec space sizes") {
  CHECK(linear_spec_count(group("zn:2"), false) == 4);
  CHECK(linear_spec_count(group("zn:5"), false) == 6400);
  CHECK(linear_spec_count(group("zn:3"), true) == 12);
  CHECK(linear_spec_count(group("zn:6"), false) == 576);
  CHECK(linear_spec_count(group("s3"), false) == 46656);
}

TEST_CASE("census counts match an independent enumeration") {
  const char* groups[] = {"zn:2", "zn:3", "zn:4", "zn:5", "z2xz2"};
  for (const char* name : groups) {
    const FiniteGroup g = group(name);
    for (std::size_t k = 0; k < 9; ++k) {
      CAPTURE(name);
      CAPTURE(k + 1);
      const CensusReport r = run_census(g, builtin(ward_identities()[k]), SpecKind::middle, {1, name});
      CHECK(r.satisfying.size() == naive_census(g.table(), oracle::ward_shapes()[k], r.circ_only));
    }
  }
}

TEST_CASE("pinned census sizes") {
  const CensusReport z2 = run_census(group("zn:2"), builtin(Builtin::e2), SpecKind::middle);
  CHECK(z2.total_specs == 4);
  CHECK(z2.satisfying.size() == 4);
  const CensusReport z5 = run_census(group("zn:5"), builtin(Builtin::e4), SpecKind::middle);
  CHECK(z5.satisfying.size() == 20);
  CHECK(z5.satisfying.size() == naive_census(oracle::zn_add(5), oracle::ward_shapes()[3], false));
  const CensusReport s3 = run_census(group("s3"), builtin(Builtin::e2), SpecKind::middle);
  CHECK(s3.satisfying.empty());
  CHECK(naive_census(group("s3").table(), oracle::ward_shapes()[1], false) == 0);
}

TEST_CASE("circ-only identities enumerate only the circ operation") {
  const CensusReport r = run_census(group("zn:3"), builtin(Builtin::e3), SpecKind::middle);
  CHECK(r.circ_only);
  CHECK(r.total_specs == 12);
  for (const auto& d : r.satisfying) {
    CHECK(d.alpha == 0);
    CHECK(d.beta == 0);
    CHECK(d.b == 0);
  }
}

TEST_CASE("census output does not depend on the worker count") {
  const SpecSpace space(group("d4"), SpecKind::middle);
  const Equation eq = builtin(Builtin::e6);
  const auto one = run_census(space, eq, {1, "d4"}).satisfying;
  const auto three = run_census(space, eq, {3, "d4"}).satisfying;
  const auto seven = run_census(space, eq, {7, "d4"}).satisfying;
  CHECK(one == three);
  CHECK(one == seven);
  CHECK(std::is_sorted(one.begin(), one.end()));
}

TEST_CASE("digests decode to the specs they enumerate") {
  const SpecSpace space(group("zn:5"), SpecKind::end);
  for (std::size_t ci = 0; ci < space.operation_count(); ci += 7) {
    for (std::size_t si = 0; si < space.operation_count(); si += 11) {
      const SpecDigest d = space.digest(ci, si);
      CHECK(space.operation_index(d.phi, d.psi, d.a) == ci);
      CHECK(space.operation_index(d.alpha, d.beta, d.b) == si);
      const Biquasigroup b = realize(space.spec(d));
      CHECK(b.circ() == space.operation(ci));
      CHECK(b.star() == space.operation(si));
    }
  }
  CHECK_THROWS_AS(space.operation_index(4, 0, 0), Error);
}

TEST_CASE("enumeration visits specs in index order and can stop early") {
  const SpecSpace space(group("zn:3"), SpecKind::middle);
  std::size_t seen = 0;
  enumerate_linear_specs(space, false, [&](const LinearSpec&) { return ++seen < 10; });
  CHECK(seen == 10);
  seen = 0;
  enumerate_linear_specs(space, true, [&](const LinearSpec&) { return ++seen, true; });
  CHECK(seen == 12);
}

TEST_CASE("oversized censuses are refused") {
  const SpecSpace space(group("z2cube"), SpecKind::middle);
  CHECK(space.operation_count() == 168u * 168u * 8u);
  CHECK_THROWS_AS(run_census(space, builtin(Builtin::e2)), Error);
  CHECK_THROWS_AS(verify_theorem(TheoremId::T22, group("z2cube"), {}), Error);
  // Circ-only identities only walk the operations.
  CHECK(run_census(space, builtin(Builtin::e3)).circ_only);
}

TEST_CASE("predicate examples over Z5") {
  auto g = std::make_shared<const FiniteGroup>(group("zn:5"));
  const auto mul = [](Element k) {
    std::vector<Element> img(5);
    for (Element x = 0; x < 5; ++x) img[x] = (k * x) % 5;
    return Permutation(img);
  };
  // x∘y = x + a + ψy, x*y = αx + b - αy: the e2 family.
  const LinearSpec e2_member(g, mul(1), mul(3), 2, mul(2), mul(3), 4);
  CHECK(predicate(TheoremId::T22, e2_member));
  CHECK(oracle::ward_holds(realize(e2_member).circ(), realize(e2_member).star(), oracle::ward_shapes()[1]));
  const LinearSpec not_e2(g, mul(2), mul(3), 2, mul(2), mul(3), 4);
  CHECK_FALSE(predicate(TheoremId::T22, not_e2));

  // ψ = -φ, α = φ², β = -φ², b = a.
  const LinearSpec e4_member(g, mul(2), mul(3), 1, mul(4), mul(1), 1);
  CHECK(predicate(TheoremId::T24a, e4_member));
  CHECK(oracle::ward_holds(realize(e4_member).circ(), realize(e4_member).star(), oracle::ward_shapes()[3]));

  CHECK_THROWS_AS(predicate(TheoremId::SEC10, e4_member), Error);
}

TEST_CASE("med7zn refuses groups other than the canonical Z_n") {
  auto g = std::make_shared<const FiniteGroup>(group("z2xz2"));
  const Permutation eps = Permutation::identity(4);
  CHECK_THROWS_AS(predicate(TheoremId::MED7zn, LinearSpec(g, eps, eps, 0, eps, eps, 0)), Error);
}

TEST_CASE("theorem names and identities") {
  for (const TheoremId id : all_theorems()) CHECK(parse_theorem_id(to_string(id)) == id);
  CHECK(parse_theorem_id("T24A") == TheoremId::T24a);
  CHECK_FALSE(parse_theorem_id("t99"));
  CHECK(theorem_identity(TheoremId::T27) == Builtin::e7);
  CHECK_FALSE(theorem_identity(TheoremId::SEC10));
  CHECK(requires_commutative(TheoremId::T22));
  CHECK_FALSE(requires_commutative(TheoremId::T26));
}

TEST_CASE("linear theorems agree with their censuses on small groups") {
  const TheoremId ids[] = {TheoremId::T11, TheoremId::T22,  TheoremId::T23,       TheoremId::T24,
                           TheoremId::T24a, TheoremId::T25, TheoremId::T26,       TheoremId::T26lin,
                           TheoremId::T27, TheoremId::T28,  TheoremId::T29struct, TheoremId::T29lin,
                           TheoremId::P5lin, TheoremId::MED7, TheoremId::BOOL,    TheoremId::SEC10};
  for (const char* name : {"zn:3", "zn:4", "z2xz2", "s3"}) {
    for (const TheoremId id : ids) {
      CAPTURE(name);
      CAPTURE(to_string(id));
      CHECK(verify_theorem(id, group(name), {}).agree);
    }
  }
  for (const char* name : {"zn:2", "zn:5", "zn:6"}) {
    CHECK(verify_theorem(TheoremId::MED7zn, group(name), {}).agree);
  }
}

TEST_CASE("the inverse-operation spec is the only boolean witness") {
  const TheoremCheck z2 = verify_theorem(TheoremId::BOOL, group("z2xz2"), {});
  REQUIRE(z2.census_set.size() == 1);
  CHECK(z2.agree);
  const TheoremCheck z3 = verify_theorem(TheoremId::BOOL, group("zn:3"), {});
  CHECK(z3.census_set.empty());
  CHECK(z3.agree);
}

TEST_CASE("sec10 restricted to one identity") {
  VerifyOptions opts;
  opts.identity = Builtin::e4;
  const TheoremCheck c = verify_theorem(TheoremId::SEC10, group("zn:5"), opts);
  CHECK(c.agree);
  // 20 middle-kind plus 20 end-kind satisfying specs.
  CHECK(c.census_set.size() == 2 * naive_census(oracle::zn_add(5), oracle::ward_shapes()[3], false));
  opts.identity = Builtin::e1;
  CHECK_THROWS_AS(verify_theorem(TheoremId::SEC10, group("zn:5"), opts), Error);
}
