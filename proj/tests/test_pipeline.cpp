#include <doctest.h>

#include "forge/errors.hpp"
#include "forge/pipeline.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

Quandle s4_class(std::vector<int> rep) {
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  return conjugation_quandle(s4, symmetric_element(rep)).quandle;
}

// a * b = a for b < 3 and a * 3 = sigma(a), sigma = (0 1); it covers the
// trivial quandle of order 2 and sigma fixes 2 while moving 0 in one fiber.
QuandleMap synthetic_covering() {
  Quandle y = validate_quandle({{0, 0, 0, 1}, {1, 1, 1, 0}, {2, 2, 2, 2}, {3, 3, 3, 3}});
  return QuandleMap{y, trivial_quandle(2), {0, 0, 0, 1}};
}

std::vector<BraidKnot> small_knots() {
  std::vector<BraidKnot> ks;
  for (const BraidKnot& k : bundled_knots())
    if (k.strands() <= 3) ks.push_back(k);
  return ks;
}

}  // namespace

TEST_CASE("inn sequences") {
  InnSequence r3 = inn_sequence(dihedral_quandle(3));
  CHECK(r3.length() == 0);
  CHECK(r3.terminal_faithful);
  InnSequence t = inn_sequence(trivial_quandle(4));
  CHECK(t.length() == 1);
  CHECK(t.quandles.back().order() == 1);
  Quandle r3q = dihedral_quandle(3);
  InnSequence e = inn_sequence(abelian_extension(r3q, Cocycle2::zero(r3q, 2)).quandle);
  CHECK(e.length() == 1);
  CHECK(e.quandles.back().order() == 3);
  for (const CorpusEntry& c : builtin_corpus()) {
    if (c.quandle.order() > 12) continue;
    InnSequence s = inn_sequence(c.quandle);
    CHECK(is_faithful(s.quandles.back()));
    QuandleMap total = identity_map(c.quandle);
    for (const QuandleMap& m : s.maps) {
      CHECK(is_covering(m));
      CHECK(m.target.order() < m.source.order());
      total = compose(total, m);
    }
    CHECK(total.is_homomorphism());
    CHECK(total.is_surjective());
  }
  CHECK_THROWS_AS(compose(identity_map(dihedral_quandle(3)), identity_map(dihedral_quandle(5))), ShapeMismatch);
}

TEST_CASE("index-2 recovery round trip") {
  for (const ExtensionCase& c : extension_corpus(6, {2})) {
    if (!is_connected(c.base)) continue;
    Extension e = abelian_extension(c.base, c.cocycle);
    Index2Recovery r = recover_index2_cocycle(e.projection);
    CHECK_MESSAGE(cohomologous(c.base, r.cocycle, c.cocycle), c.name);
    CHECK(r.isomorphism.is_homomorphism());
  }
  // A relabeled extension is recovered up to cohomology too.
  Quandle tet = tetrahedral_quandle();
  Cocycle2 phi = second_cohomology(tet, 2).representatives.at(0);
  Extension e = abelian_extension(tet, phi);
  std::vector<int> swap = {1, 0, 2, 3, 5, 4, 6, 7};
  Quandle relabeled = validate_quandle(oracle::relabel(e.quandle.rows(), swap));
  std::vector<int> images(8);
  for (int k = 0; k < 8; ++k) images[swap[k]] = k / 2;
  Index2Recovery r = recover_index2_cocycle(QuandleMap{relabeled, tet, images});
  CHECK(cohomologous(tet, r.cocycle, phi));
}

TEST_CASE("index-2 recovery from inner representations") {
  Quandle x = s4_class({1, 0, 2, 3});
  Cocycle2 phi = second_cohomology(x, 2).representatives.at(0);
  Quandle y = abelian_extension(x, phi).quandle;
  InnImage img = inn_image(y);
  REQUIRE(img.quandle.order() * 2 == y.order());
  Index2Recovery r = recover_index2_cocycle(img.map);
  CHECK(r.isomorphism.is_homomorphism());
  CHECK(r.cocycle.order() == 6);
}

TEST_CASE("index-2 recovery errors") {
  Quandle r3 = dihedral_quandle(3);
  CHECK_THROWS_AS(recover_index2_cocycle(identity_map(r3)), NotIndex2);
  CHECK_THROWS_AS(recover_index2_cocycle(QuandleMap{r3, r3, {0, 0, 0}}), NotEpimorphism);
  Quandle rt = product_quandle(r3, trivial_quandle(2));
  std::vector<int> second(6);
  for (int i = 0; i < 6; ++i) second[i] = i % 2;
  CHECK_THROWS_AS(recover_index2_cocycle(QuandleMap{rt, trivial_quandle(2), second}), NotACovering);
  Quandle e = abelian_extension(r3, Cocycle2::zero(r3, 3)).quandle;
  std::vector<int> images(9);
  for (int k = 0; k < 9; ++k) images[k] = k / 3;
  CHECK_THROWS_AS(recover_index2_cocycle(QuandleMap{e, r3, images}), NotIndex2);
}

TEST_CASE("fiber criterion") {
  for (const ExtensionCase& c : extension_corpus(4, {2, 3})) {
    Extension e = abelian_extension(c.base, c.cocycle);
    FiberCriterion f = fiber_criterion(e.projection);
    CHECK_MESSAGE(f.holds, c.name);
    CHECK(f.inn_order == inner_group(e.quandle).order());
  }
  CHECK(fiber_criterion(identity_map(dihedral_quandle(5))).holds);
  QuandleMap bad = synthetic_covering();
  REQUIRE(is_covering(bad));
  FiberCriterion f = fiber_criterion(bad);
  CHECK_FALSE(f.holds);
  REQUIRE(f.witness);
  CHECK(f.witness->beta(f.witness->fixed) == f.witness->fixed);
  CHECK(f.witness->beta(f.witness->moved) != f.witness->moved);
  CHECK(bad.images[f.witness->fixed] == bad.images[f.witness->moved]);
  FiberCriterion s = fiber_criterion_serial(bad);
  CHECK(s.witness->beta == f.witness->beta);
  CHECK_THROWS_AS(fiber_criterion(QuandleMap{dihedral_quandle(3), dihedral_quandle(3), {0, 0, 0}}), NotEpimorphism);
}

TEST_CASE("constancy pipeline on the transposition class of S4") {
  Quandle x = s4_class({1, 0, 2, 3});
  Cocycle2 phi = second_cohomology(x, 2).representatives.at(0);
  ExtensionVerdict v = theorem31_pipeline(x, phi, bundled_knots());
  CHECK(v.extension.quandle.order() == 12);
  CHECK(v.is_conjugation == Verdict::yes);
  CHECK(v.inn_preimage_found);
  REQUIRE(v.inn_preimage);
  CHECK(are_isomorphic(inn_image(*v.inn_preimage).quandle, v.extension.quandle));
  CHECK(v.invariant_constant_on_corpus);
  CHECK(v.end_monochromatic_checked);
}

TEST_CASE("constancy pipeline with a non-constant invariant") {
  Quandle tet = tetrahedral_quandle();
  Cocycle2 phi = second_cohomology(tet, 2).representatives.at(0);
  ExtensionVerdict v = theorem31_pipeline(tet, phi, small_knots());
  CHECK(v.is_conjugation == Verdict::no);
  CHECK_FALSE(v.invariant_constant_on_corpus);
  CHECK_FALSE(v.inn_preimage_found);
  ExtensionVerdict z = theorem31_pipeline(tet, Cocycle2::zero(tet, 2), small_knots());
  CHECK(z.invariant_constant_on_corpus);
  CHECK(z.extension.quandle == product_quandle(tet, trivial_quandle(2)));
  // The trivial extension of a connected quandle is disconnected.
  CHECK(z.is_conjugation == Verdict::not_applicable);
}

TEST_CASE("coefficient vanishing check") {
  Quandle four = s4_class({1, 2, 3, 0});
  Cocycle2 psi = second_cohomology(four, 4).representatives.at(0);
  Theorem35Report r = theorem35_check(four, psi, 2, bundled_knots());
  CHECK(r.m == 2);
  if (r.hypothesis_holds) CHECK(r.vanishing_observed);
  Theorem35Report one = theorem35_check(four, psi, 1, small_knots());
  CHECK(one.verdict.cocycle == psi);
  Theorem35Report all = theorem35_check(four, psi, 4, small_knots());
  CHECK(all.m == 1);
  CHECK(all.vanishing_observed);
  CHECK_THROWS_AS(theorem35_check(four, psi, 3, small_knots()), DNotDividesModulus);
}

TEST_CASE("negative certificates") {
  Quandle tet = tetrahedral_quandle();
  Cocycle2 phi = second_cohomology(tet, 2).representatives.at(0);
  NegativeCertificate c = negative_certificates(tet, phi, small_knots());
  CHECK(c.issued);
  CHECK(c.knot == "3_1");
  CHECK(c.conjugation == Verdict::no);
  CHECK(c.consistent);
  NegativeCertificate z = negative_certificates(tet, Cocycle2::zero(tet, 2), small_knots());
  CHECK_FALSE(z.issued);
  NegativeCertificate capped = negative_certificates(tet, phi, small_knots(), 3);
  CHECK_FALSE(capped.conjugation);
  CHECK(capped.consistent);
}

TEST_CASE("built-in corpus") {
  auto corpus = builtin_corpus();
  CHECK(corpus.size() > 30);
  for (const CorpusEntry& e : corpus) CHECK(oracle::is_quandle(e.quandle.rows()));
  Quandle tet = tetrahedral_quandle();
  CHECK(tet.order() == 4);
  CHECK(is_connected(tet));
  CHECK(is_faithful(tet));
}
