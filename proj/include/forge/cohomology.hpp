#pragma once

// Second quandle cohomology with cyclic coefficients Z_m, written additively.
//
// A 2-cochain is a function X x X -> Z_m. It is a 2-cocycle when it vanishes on
// the diagonal and, for all x, y, z,
//   f(x,y) - f(x,z) + f(x*y, z) - f(x*z, y*z) = 0  (mod m).
// Coboundaries are (delta g)(x,y) = g(x) - g(x*y); relabeling an extension by
// (x, a) -> (x, a + g(x)) changes its cocycle by a coboundary.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "forge/quandle.hpp"

namespace forge {

// Unchecked n x n table over Z_m, row-major.
struct Cochain2 {
  int n = 0;
  int m = 1;
  std::vector<int> values;

  static Cochain2 zero(int n, int m);
  int at(int x, int y) const { return values[static_cast<std::size_t>(x) * n + y]; }
  int& at(int x, int y) { return values[static_cast<std::size_t>(x) * n + y]; }
  friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

struct CocycleCheck {
  bool ok = true;
  bool diagonal = false;                 // failure is a nonzero diagonal entry
  std::array<int, 3> witness{-1, -1, -1};
  explicit operator bool() const { return ok; }
};

CocycleCheck is_cocycle(const Quandle& q, const Cochain2& f);

// A cochain verified to be a 2-cocycle of a specific quandle.
class Cocycle2 {
 public:
  // Throws NotACocycle, or ShapeMismatch when the shape does not match q.
  static Cocycle2 checked(const Quandle& q, Cochain2 values);
  static Cocycle2 zero(const Quandle& q, int m);

  int order() const { return c_.n; }
  int modulus() const { return c_.m; }
  int at(int x, int y) const { return c_.at(x, y); }
  const Cochain2& cochain() const { return c_; }

  friend bool operator==(const Cocycle2&, const Cocycle2&) = default;

 private:
  explicit Cocycle2(Cochain2 c) : c_(std::move(c)) {}
  Cochain2 c_;
};

Cocycle2 coboundary(const Quandle& q, int m, const std::vector<int>& gamma);

struct CohomologyGroup {
  int modulus = 0;
  std::vector<int> factors;                // invariant factors > 1, each dividing the next
  std::vector<Cocycle2> representatives;   // one per factor, of that additive order in H^2
  std::vector<int> cocycle_factors;        // cyclic decomposition of the cocycle group
  std::vector<int> coboundary_factors;     // cyclic decomposition of the coboundary group

  bool trivial() const { return factors.empty(); }
};

CohomologyGroup second_cohomology(const Quandle& q, int m);

// Throws ShapeMismatch on differing shapes.
bool cohomologous(const Quandle& q, const Cocycle2& a, const Cocycle2& b);

// Solves delta g = f (mod m); empty when f is not a coboundary.
std::optional<std::vector<int>> coboundary_preimage(const Quandle& q, const Cochain2& f);

// d * psi lies in the order-(n/d) subgroup of Z_n; returns it as a Z_{n/d} cocycle.
// Throws DNotDividesModulus.
Cocycle2 cocycle_power(const Quandle& q, const Cocycle2& psi, int d);

// Product of cyclic factors; empty optional on 64-bit overflow.
std::optional<std::uint64_t> group_order(const std::vector<int>& factors);

}  // namespace forge
