#include <doctest.h>

#include <random>

#include "biq/constructors.hpp"
#include "biq/error.hpp"
#include "biq/properties.hpp"
#include "oracles.hpp"

using namespace biq;

TEST_CASE("idempotents, neutral elements and unipotency of small tables") {
  const CayleyTable z5 = oracle::zn_add(5);
  CHECK(idempotents(z5) == std::vector<Element>{0});
  const auto ne = neutral_elements(z5);
  CHECK(ne.left == Element{0});
  CHECK(ne.right == Element{0});
  CHECK_FALSE(unipotency(z5));

  const CayleyTable w = ward_from_group(catalog(parse_group_name("zn:5")));
  CHECK(unipotency(w) == Element{0});
  CHECK(neutral_elements(w).right == Element{0});
  CHECK_FALSE(neutral_elements(w).left);

  // 2x - y mod 5 is idempotent everywhere.
  const CayleyTable idem = CayleyTable::generate(5, [](Element x, Element y) { return (2 * x + 5 - y) % 5; });
  CHECK(idempotents(idem).size() == 5);
}

TEST_CASE("single-table identities agree with direct loops") {
  std::mt19937 rng(11);
  for (int round = 0; round < 30; ++round) {
    const CayleyTable t = oracle::random_latin(1 + round % 6, rng);
    CHECK(is_medial(t) == oracle::medial(t));
    CHECK(is_paramedial(t) == oracle::paramedial(t));
    CHECK(is_ward(t) == oracle::ward_holds(t, t, oracle::ward_shapes()[0]));
  }
}

TEST_CASE("is_ward rejects non-latin input") {
  CHECK_THROWS_AS(is_ward(CayleyTable(2, {0, 0, 1, 1})), Error);
}

TEST_CASE("boolean groups") {
  CHECK(is_boolean_group(catalog(parse_group_name("zn:2"))));
  CHECK(is_boolean_group(catalog(parse_group_name("z2xz2"))));
  CHECK(is_boolean_group(catalog(parse_group_name("z2cube"))));
  CHECK(is_boolean_group(catalog(parse_group_name("zn:1"))));
  CHECK_FALSE(is_boolean_group(catalog(parse_group_name("zn:4"))));
  CHECK_FALSE(is_boolean_group(catalog(parse_group_name("s3"))));
}

TEST_CASE("full report fields") {
  const FiniteGroup g = catalog(parse_group_name("s3"));
  const Biquasigroup b = inverse_op_biq(catalog(parse_group_name("zn:3")));
  const PropertyReport r = full_report(b);
  CHECK(r.ward_circ);
  CHECK_FALSE(r.ward_star);
  CHECK(r.commutative_star);
  CHECK_FALSE(r.commutative_circ);
  CHECK(r.unipotent_circ == Element{0});
  CHECK(r.right_neutral_star == Element{0});
  CHECK(r.left_neutral_star == Element{0});
  CHECK(r.medial_circ);
  CHECK(r.left_modular_circ);
  CHECK_FALSE(r.tables_equal);

  const CayleyTable w = ward_from_group(g);
  const PropertyReport s = full_report(Biquasigroup(w, w));
  CHECK(s.tables_equal);
  CHECK(s.ward_circ);
  CHECK_FALSE(s.medial_circ);
}
