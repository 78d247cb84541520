#include <doctest.h>

#include <random>

#include "forge/constructions.hpp"
#include "forge/errors.hpp"
#include "forge/quandle.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

// Tables whose columns are permutations fixing the diagonal, so only
// distributivity can fail.
Table random_column_table(int n, std::mt19937& rng) {
  Table t(n, std::vector<int>(n));
  for (int b = 0; b < n; ++b) {
    std::vector<int> others;
    for (int a = 0; a < n; ++a)
      if (a != b) others.push_back(a);
    std::shuffle(others.begin(), others.end(), rng);
    int k = 0;
    for (int a = 0; a < n; ++a) t[a][b] = a == b ? b : others[k++];
  }
  return t;
}

}  // namespace

TEST_CASE("permutation arithmetic") {
  Permutation p({1, 2, 0, 3});
  Permutation q({1, 0, 2, 3});
  CHECK((p * q)(0) == q(p(0)));
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.order() == 3);
  CHECK(Permutation({1, 0, 3, 4, 2}).order() == 6);
  CHECK(p.cycle_type() == std::vector<int>{1, 3});
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
}

TEST_CASE("validate accepts the standard families") {
  CHECK(dihedral_quandle(3).order() == 3);
  CHECK(trivial_quandle(4).order() == 4);
  Quandle r3 = dihedral_quandle(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(r3.op(a, b) == ((2 * b - a) % 3 + 3) % 3);
}

TEST_CASE("validate reports the first failing axiom with a witness") {
  SUBCASE("trivial table of order 2 is valid") { CHECK_NOTHROW(validate_quandle({{0, 0}, {1, 1}})); }
  SUBCASE("idempotency") {
    try {
      validate_quandle({{1, 1}, {0, 0}});
      FAIL("expected a violation");
    } catch (const AxiomViolation& e) {
      CHECK(e.kind == Axiom::idempotency);
      CHECK(e.witness[0] == 0);
    }
  }
  SUBCASE("invertibility") {
    try {
      validate_quandle({{0, 0, 0}, {0, 1, 1}, {2, 2, 2}});
      FAIL("expected a violation");
    } catch (const AxiomViolation& e) {
      CHECK(e.kind == Axiom::invertibility);
      Table t{{0, 0, 0}, {0, 1, 1}, {2, 2, 2}};
      CHECK(e.witness[0] != e.witness[1]);
      CHECK(t[e.witness[0]][e.witness[2]] == t[e.witness[1]][e.witness[2]]);
    }
  }
  SUBCASE("shape and range") {
    CHECK_THROWS_AS(validate_quandle({}), ParseError);
    CHECK_THROWS_AS(validate_quandle({{0, 1}}), ParseError);
    CHECK_THROWS_AS(validate_quandle({{0, 2}, {1, 1}}), ParseError);
  }
}

TEST_CASE("validate agrees with the brute-force axiom check on random tables") {
  std::mt19937 rng(7);
  int distributivity_failures = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + trial % 3;
    Table t = trial % 4 == 0 ? oracle::random_table(n, rng) : random_column_table(n, rng);
    bool expected = oracle::is_quandle(t);
    try {
      validate_quandle(t);
      CHECK(expected);
    } catch (const AxiomViolation& e) {
      CHECK_FALSE(expected);
      if (e.kind == Axiom::distributivity) {
        ++distributivity_failures;
        auto [a, b, c] = e.witness;
        CHECK(t[t[a][b]][c] != t[t[a][c]][t[b][c]]);
      }
    }
  }
  CHECK(distributivity_failures > 0);
}

TEST_CASE("right translations are the columns") {
  Quandle q = alexander_quandle(7, 3);
  for (int b = 0; b < q.order(); ++b) {
    Permutation r = right_translation(q, b);
    for (int a = 0; a < q.order(); ++a) CHECK(r(a) == q.op(a, b));
  }
}

TEST_CASE("inner group, connectivity and faithfulness") {
  CHECK(inner_group(dihedral_quandle(3)).order() == 6);
  CHECK(inner_group(dihedral_quandle(5)).order() == 10);
  CHECK(inner_group(trivial_quandle(3)).order() == 1);
  CHECK(is_connected(dihedral_quandle(5)));
  CHECK_FALSE(is_connected(dihedral_quandle(4)));
  CHECK(is_faithful(dihedral_quandle(3)));
  CHECK_FALSE(is_faithful(trivial_quandle(2)));
  CHECK(is_faithful(trivial_quandle(1)));
  CHECK(orbit(dihedral_quandle(4), 0) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(inner_group(dihedral_quandle(9), 5), GroupTooLarge);
}

TEST_CASE("inn image is a covering onto distinct translations") {
  std::mt19937 rng(3);
  for (const Quandle& q : {dihedral_quandle(4), trivial_quandle(3), dihedral_quandle(6), alexander_quandle(8, 3),
                           validate_quandle(oracle::random_relabel(dihedral_quandle(6).rows(), rng))}) {
    InnImage img = inn_image(q);
    CHECK(img.map.is_homomorphism());
    CHECK(is_covering(img.map));
    for (int a = 0; a < q.order(); ++a) CHECK(img.translations[img.map.images[a]] == right_translation(q, a));
    for (int a = 0; a < q.order(); ++a)
      for (int b = 0; b < q.order(); ++b) {
        Permutation rb = right_translation(q, b);
        CHECK(right_translation(q, q.op(a, b)) == rb.inverse() * right_translation(q, a) * rb);
      }
  }
  CHECK(inn_image(trivial_quandle(4)).quandle.order() == 1);
  CHECK(inn_image(dihedral_quandle(4)).quandle.order() == 2);
}

TEST_CASE("coverings") {
  Quandle r3 = dihedral_quandle(3);
  Quandle p = product_quandle(r3, trivial_quandle(2));
  std::vector<int> images(6);
  for (int k = 0; k < 6; ++k) images[k] = k / 2;
  CHECK(is_covering(QuandleMap{p, r3, images}));
  std::vector<int> first(9);
  for (int k = 0; k < 9; ++k) first[k] = k / 3;
  CHECK_FALSE(is_covering(QuandleMap{product_quandle(r3, r3), r3, first}));
  CHECK(is_covering(identity_map(r3)));
  // Collapsing R3 x T2 onto T2 is an epimorphism but not a covering.
  Quandle t2 = trivial_quandle(2);
  Quandle rt = product_quandle(r3, t2);
  std::vector<int> second(6);
  for (int k = 0; k < 6; ++k) second[k] = k % 2;
  CHECK_FALSE(is_covering(QuandleMap{rt, t2, second}));
  CHECK_THROWS_AS(is_covering(QuandleMap{r3, r3, {0, 0, 0}}), NotEpimorphism);
}

TEST_CASE("isomorphism search") {
  Quandle r3 = dihedral_quandle(3);
  auto self = are_isomorphic(r3, r3);
  REQUIRE(self);
  CHECK(self->is_homomorphism());
  CHECK_FALSE(are_isomorphic(r3, trivial_quandle(3)));
  CHECK_FALSE(are_isomorphic(r3, dihedral_quandle(4)));
  std::mt19937 rng(11);
  std::vector<Quandle> corpus = {dihedral_quandle(5), alexander_quandle(7, 3), dihedral_quandle(8),
                                 conjugation_quandle(FiniteGroup::symmetric(4), symmetric_element({1, 2, 3, 0})).quandle,
                                 galex(FiniteGroup::symmetric(3), GroupAutomorphism::conjugation(FiniteGroup::symmetric(3), 1))};
  for (const Quandle& q : corpus)
    for (int trial = 0; trial < 5; ++trial) {
      Quandle r = validate_quandle(oracle::random_relabel(q.rows(), rng));
      auto f = are_isomorphic(q, r);
      auto g = are_isomorphic(r, q);
      REQUIRE(f);
      REQUIRE(g);
      CHECK(f->is_homomorphism());
      CHECK(g->is_homomorphism());
      CHECK(f->is_surjective());
    }
  CHECK_FALSE(are_isomorphic(alexander_quandle(7, 2), alexander_quandle(7, 3)));
}

TEST_CASE("products") {
  Quandle r3 = dihedral_quandle(3);
  Quandle p = product_quandle(r3, r3);
  CHECK(p.order() == 9);
  CHECK(is_faithful(p));
  CHECK(inner_group(product_quandle(trivial_quandle(2), trivial_quandle(3))).order() == 1);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) CHECK(p.op(a, b) == r3.op(a / 3, b / 3) * 3 + r3.op(a % 3, b % 3));
}

TEST_CASE("epimorphism index") {
  Quandle r3 = dihedral_quandle(3);
  CHECK(epimorphism_index(identity_map(r3)).index == 1);
  Quandle q = product_quandle(r3, trivial_quandle(2));
  std::vector<int> images(6);
  for (int k = 0; k < 6; ++k) images[k] = k / 2;
  auto idx = epimorphism_index(QuandleMap{q, r3, images});
  CHECK(idx.index == 2);
  CHECK(idx.equal_fibers);
  CHECK_THROWS_AS(epimorphism_index(QuandleMap{r3, r3, {0, 0, 0}}), NotEpimorphism);
}
