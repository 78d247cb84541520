#include <doctest.h>

#include <random>

#include "forge/cohomology.hpp"
#include "forge/constructions.hpp"
#include "forge/errors.hpp"
#include "forge/smith.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b) {
  ModMatrix c(a.rows(), b.cols(), a.modulus());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      for (int j = 0; j < b.cols(); ++j) c.add(i, j, a(i, k) * b(k, j));
  return c;
}

bool is_identity(const ModMatrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != (i == j ? 1 % a.modulus() : 0)) return false;
  return true;
}

Cochain2 scaled(const Cocycle2& c, int k) {
  Cochain2 f = c.cochain();
  for (int& v : f.values) v = static_cast<int>((static_cast<long long>(v) * k) % f.m);
  return f;
}

std::uint64_t order_of(const std::vector<int>& factors) { return *group_order(factors); }

}  // namespace

TEST_CASE("Smith form over Z/m: U A V = S with a divisibility chain") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = std::vector<int>{2, 3, 4, 6, 8, 9, 12, 30}[trial % 8];
    const int rows = 1 + trial % 7, cols = 1 + (trial * 3) % 6;
    std::uniform_int_distribution<int> v(0, m - 1);
    ModMatrix a(rows, cols, m);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a.set(i, j, trial % 5 == 0 ? v(rng) * (m / std::max(1, m / 2)) : v(rng));
    SmithForm s = smith_normal_form(a, {.left = true, .left_inv = true, .right = true, .right_inv = true});
    CHECK(is_identity(multiply(s.left, s.left_inv)));
    CHECK(is_identity(multiply(s.right, s.right_inv)));
    ModMatrix d = multiply(multiply(s.left, a), s.right);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        if (i != j) {
          CHECK(d(i, j) == 0);
        } else {
          CHECK(d(i, i) == s.diagonal[i] % m);
        }
      }
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
      CHECK(m % s.diagonal[i] == 0);
      if (i + 1 < s.diagonal.size()) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
  }
}

TEST_CASE("cocycle and coboundary counts match exhaustive enumeration") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : oracle::all_quandles(n))
      for (int m = 2; m <= 4; ++m) {
        Quandle q = validate_quandle(t);
        CohomologyGroup h = second_cohomology(q, m);
        const auto z = oracle::count_cocycles(t, m);
        const auto b = oracle::count_coboundaries(t, m);
        CHECK(order_of(h.cocycle_factors) == z);
        CHECK(order_of(h.coboundary_factors) == b);
        CHECK(order_of(h.factors) == z / b);
      }
}

TEST_CASE("known second cohomology groups") {
  CHECK(second_cohomology(trivial_quandle(2), 2).factors == std::vector<int>{2, 2});
  CHECK(second_cohomology(trivial_quandle(3), 5).factors.size() == 6);
  CHECK(second_cohomology(dihedral_quandle(3), 2).trivial());
  CHECK(second_cohomology(dihedral_quandle(3), 3).trivial());
  CHECK(second_cohomology(dihedral_quandle(5), 5).trivial());
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  Quandle tr = conjugation_quandle(s4, symmetric_element({1, 0, 2, 3})).quandle;
  CHECK(second_cohomology(tr, 2).factors == std::vector<int>{2});
  Quandle four = conjugation_quandle(s4, symmetric_element({1, 2, 3, 0})).quandle;
  CHECK(second_cohomology(four, 4).factors == std::vector<int>{4});
  CHECK(second_cohomology(dihedral_quandle(3), 1).trivial());
  CHECK(second_cohomology(trivial_quandle(1), 7).trivial());
}

TEST_CASE("representatives have the order of their factor") {
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  std::vector<Quandle> qs = {trivial_quandle(2), dihedral_quandle(4),
                             conjugation_quandle(s4, symmetric_element({1, 2, 3, 0})).quandle,
                             conjugation_quandle(s4, symmetric_element({1, 2, 0, 3})).quandle};
  for (const Quandle& q : qs)
    for (int m : {2, 4, 6}) {
      CohomologyGroup h = second_cohomology(q, m);
      REQUIRE(h.representatives.size() == h.factors.size());
      for (std::size_t i = 0; i < h.factors.size(); ++i) {
        const Cocycle2& r = h.representatives[i];
        CHECK(is_cocycle(q, r.cochain()));
        for (int k = 1; k <= h.factors[i]; ++k)
          CHECK(coboundary_preimage(q, scaled(r, k)).has_value() == (k % h.factors[i] == 0));
      }
    }
}

TEST_CASE("coboundaries solve back to their potential") {
  std::mt19937 rng(9);
  for (const Quandle& q : {dihedral_quandle(5), alexander_quandle(8, 3), trivial_quandle(3)})
    for (int m : {2, 3, 4, 6}) {
      std::uniform_int_distribution<int> v(0, m - 1);
      std::vector<int> gamma(q.order());
      for (int& g : gamma) g = v(rng);
      Cocycle2 b = coboundary(q, m, gamma);
      auto pre = coboundary_preimage(q, b.cochain());
      REQUIRE(pre);
      CHECK(coboundary(q, m, *pre) == b);
      CHECK(cohomologous(q, b, Cocycle2::zero(q, m)));
    }
  Quandle t2 = trivial_quandle(2);
  Cochain2 f = Cochain2::zero(2, 2);
  f.at(0, 1) = 1;
  CHECK_FALSE(coboundary_preimage(t2, f));
  Cochain2 diag = Cochain2::zero(2, 2);
  diag.at(1, 1) = 1;
  CHECK_FALSE(coboundary_preimage(t2, diag));
}

TEST_CASE("cocycle errors and powers") {
  Quandle r3 = dihedral_quandle(3);
  Cochain2 diag = Cochain2::zero(3, 2);
  diag.at(2, 2) = 1;
  try {
    Cocycle2::checked(r3, diag);
    FAIL("expected NotACocycle");
  } catch (const NotACocycle& e) {
    CHECK(e.diagonal);
    CHECK(e.witness[0] == 2);
  }
  CHECK_THROWS_AS(Cocycle2::checked(r3, Cochain2::zero(2, 2)), ShapeMismatch);
  CHECK_THROWS_AS(cohomologous(r3, Cocycle2::zero(r3, 2), Cocycle2::zero(r3, 3)), ShapeMismatch);

  FiniteGroup s4 = FiniteGroup::symmetric(4);
  Quandle four = conjugation_quandle(s4, symmetric_element({1, 2, 3, 0})).quandle;
  Cocycle2 psi = second_cohomology(four, 4).representatives.at(0);
  CHECK_THROWS_AS(cocycle_power(four, psi, 3), DNotDividesModulus);
  CHECK(cocycle_power(four, psi, 1) == psi);
  Cocycle2 half = cocycle_power(four, psi, 2);
  CHECK(half.modulus() == 2);
  CHECK(cocycle_power(four, psi, 4).modulus() == 1);
  // 2 psi in Z_4 corresponds to psi mod 2 under 2Z_4 = Z_2.
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK((2 * psi.at(x, y)) % 4 == 2 * half.at(x, y));
}
