#include <doctest.h>

#include <sstream>

#include "biq/biquasigroup.hpp"
#include "biq/constructors.hpp"
#include "biq/error.hpp"
#include "biq/group.hpp"
#include "biq/linear_spec.hpp"
#include "biq/magma_io.hpp"
#include "oracles.hpp"

using namespace biq;

TEST_CASE("cayley table validates its entries") {
  CHECK_THROWS_AS(CayleyTable(0, {}), Error);
  CHECK_THROWS_AS(CayleyTable(2, {0, 1, 1}), Error);
  CHECK_THROWS_WITH(CayleyTable(2, {0, 1, 1, 2}), doctest::Contains("entry 2 at index 3"));

  const CayleyTable t(2, {0, 1, 1, 0});
  CHECK(t(1, 0) == 1);
  CHECK(t == oracle::zn_add(2));
  CHECK(is_latin_square(t));
}

TEST_CASE("latin violations name the row or column") {
  const CayleyTable rows(2, {0, 0, 1, 1});
  const auto v = find_latin_violation(rows);
  REQUIRE(v);
  CHECK(v->in_row);
  CHECK(v->line == 0);
  CHECK(v->value == 0);

  const CayleyTable cols(2, {0, 1, 0, 1});
  const auto w = find_latin_violation(cols);
  REQUIRE(w);
  CHECK_FALSE(w->in_row);
}

TEST_CASE("permutations") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
  const Permutation p({1, 2, 0});
  CHECK(p.after(p.inverse()).is_identity());
  CHECK(p.after(p) == Permutation({2, 0, 1}));
  CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("group structure recognizes groups and rejects other latin squares") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto g = group_structure(oracle::zn_add(n));
    REQUIRE(g);
    CHECK(g->commutative());
    CHECK(g->identity() == 0);
    for (Element x = 0; x < n; ++x) CHECK(g->add(x, g->inverse(x)) == 0);
  }
  // x - y mod 3 is Latin but not associative.
  const CayleyTable sub = CayleyTable::generate(3, [](Element x, Element y) { return (x + 3 - y) % 3; });
  CHECK_FALSE(group_structure(sub));
}

TEST_CASE("catalog groups are groups with element 0 as identity") {
  for (const auto& name : catalog_groups()) {
    CAPTURE(to_string(name));
    const FiniteGroup g = catalog(name);
    CHECK(oracle::is_group(g.table()));
    CHECK(oracle::associative_with_identity_zero(g.table()));
  }
}

TEST_CASE("automorphism lists match brute force over all permutations") {
  for (const auto& name : catalog_groups()) {
    CAPTURE(to_string(name));
    const FiniteGroup g = catalog(name);
    const auto expected = oracle::automorphisms(g.table());
    const auto got = automorphisms(g);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(std::vector<Element>(got[i].images().begin(), got[i].images().end()) == expected[i]);
    }
    CHECK(got.front().is_identity());
  }
}

TEST_CASE("automorphism group orders of the named groups") {
  CHECK(automorphisms(catalog(parse_group_name("zn:5"))).size() == 4);
  CHECK(automorphisms(catalog(parse_group_name("z2xz2"))).size() == 6);
  CHECK(automorphisms(catalog(parse_group_name("s3"))).size() == 6);
  CHECK(automorphisms(catalog(parse_group_name("d4"))).size() == 8);
  CHECK(automorphisms(catalog(parse_group_name("z2xz4"))).size() == 8);
  CHECK(automorphisms(catalog(parse_group_name("q8"))).size() == 24);
  CHECK(automorphisms(catalog(parse_group_name("z2cube"))).size() == 168);
}

TEST_CASE("centers") {
  CHECK(center(catalog(parse_group_name("q8"))) == std::vector<Element>{0, 4});
  CHECK(center(catalog(parse_group_name("s3"))) == std::vector<Element>{0});
  CHECK(center(catalog(parse_group_name("d4"))).size() == 2);
  CHECK(center(catalog(parse_group_name("zn:6"))).size() == 6);
}

TEST_CASE("homomorphism violations") {
  const FiniteGroup g = catalog(parse_group_name("zn:4"));
  CHECK(is_automorphism(g, Permutation({0, 3, 2, 1})));
  const Permutation swap({0, 2, 1, 3});
  CHECK_FALSE(is_automorphism(g, swap));
  CHECK(find_homomorphism_violation(g, swap));
  // Inversion is an automorphism only of abelian groups.
  const FiniteGroup s3 = catalog(parse_group_name("s3"));
  CHECK_FALSE(is_automorphism(s3, negated(s3, Permutation::identity(6))));
}

TEST_CASE("biquasigroup rejects bad pairs") {
  const CayleyTable z3 = oracle::zn_add(3);
  CHECK_THROWS_WITH(Biquasigroup(z3, oracle::zn_add(4)), doctest::Contains("order mismatch"));
  const CayleyTable bad(3, {0, 1, 2, 1, 1, 0, 2, 0, 1});
  CHECK_THROWS_WITH(Biquasigroup(bad, z3), doctest::Contains("row 1"));
  CHECK_NOTHROW(Biquasigroup(z3, z3));
}

TEST_CASE("linear specs validate automorphisms and constants") {
  auto g = std::make_shared<const FiniteGroup>(catalog(parse_group_name("zn:5")));
  const Permutation eps = Permutation::identity(5);
  const Permutation twice({0, 2, 4, 1, 3});
  CHECK_NOTHROW(LinearSpec(g, eps, twice, 1, eps, eps, 0));
  CHECK_THROWS_WITH(LinearSpec(g, Permutation({1, 0, 2, 3, 4}), eps, 0, eps, eps, 0),
                    doctest::Contains("phi is not an automorphism"));
  CHECK_THROWS_AS(LinearSpec(g, eps, eps, 5, eps, eps, 0), Error);

  // x∘y = x + 1 + 2y, x*y = x + 3 + y over Z_5.
  const LinearSpec s(g, eps, twice, 1, eps, eps, 3);
  const Biquasigroup b = realize(s);
  for (Element x = 0; x < 5; ++x) {
    for (Element y = 0; y < 5; ++y) {
      CHECK(b.circ()(x, y) == (x + 1 + 2 * y) % 5);
      CHECK(b.star()(x, y) == (x + 3 + y) % 5);
    }
  }
}

TEST_CASE("end kind places the constant last") {
  const FiniteGroup s3 = catalog(parse_group_name("s3"));
  const Permutation eps = Permutation::identity(6);
  const CayleyTable mid = linear_table(s3, SpecKind::middle, eps, 1, eps);
  const CayleyTable end = linear_table(s3, SpecKind::end, eps, 1, eps);
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      CHECK(mid(x, y) == s3.add(s3.add(x, 1), y));
      CHECK(end(x, y) == s3.add(s3.add(x, y), 1));
    }
  }
  CHECK(mid != end);
}

TEST_CASE("table files round trip") {
  const CayleyTable a = oracle::zn_add(4);
  const CayleyTable b = catalog(parse_group_name("z2xz2")).table();
  std::istringstream in(format_magma_pair(a, b));
  const auto blocks = read_magma_blocks(in);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == a);
  CHECK(blocks[1] == b);
  CHECK(read_magma(format_magma(a)) == a);
}

TEST_CASE("table file errors carry line and column") {
  const auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      std::istringstream in(text);
      read_magma_blocks(in);
    } catch (const FormatError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("2\n0 1\n1 x\n") == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(error_at("2\n0 1\n1 0 1\n").first == 3);
  CHECK(error_at("2\n0 1\n1 2\n") == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(error_at("2\n0 1\n").first != 0);
  CHECK(error_at("# comment\n2\n0 1\n1 0\n") == std::pair<std::size_t, std::size_t>{0, 0});
}
