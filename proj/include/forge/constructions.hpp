#pragma once

// Families of quandles: dihedral, Alexander, generalized Alexander GAlex(G, f),
// conjugacy classes under conjugation, and abelian extensions E(X, Z_m, phi).

#include <string>
#include <vector>

#include "forge/cohomology.hpp"
#include "forge/quandle.hpp"

namespace forge {

// Finite group given by its multiplication table.
class FiniteGroup {
 public:
  // Validates closure, associativity, identity and inverses.
  static FiniteGroup from_table(const Table& mul, std::vector<std::string> labels = {});
  static FiniteGroup cyclic(int n);
  // Elements are the permutations of 0..k-1 in lexicographic order; k <= 5.
  static FiniteGroup symmetric(int k);
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  int conj(int a, int b) const { return mul(mul(inv(b), a), b); }  // a^b = b^-1 a b
  bool is_abelian() const;
  Table table() const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int n_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int identity_ = 0;
  std::vector<std::string> labels_;
};

// Index of a permutation of 0..k-1 in FiniteGroup::symmetric(k).
int symmetric_element(const std::vector<int>& images);

class GroupAutomorphism {
 public:
  // Throws Error unless images is a bijective homomorphism.
  GroupAutomorphism(const FiniteGroup& g, std::vector<int> images);
  static GroupAutomorphism identity(const FiniteGroup& g);
  static GroupAutomorphism inversion(const FiniteGroup& g);  // abelian groups only
  static GroupAutomorphism conjugation(const FiniteGroup& g, int x);  // a -> x^-1 a x

  int operator()(int a) const { return images_[a]; }
  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

Quandle trivial_quandle(int n);
Quandle dihedral_quandle(int n);
// a * b = t a + (1 - t) b mod n; throws NotAUnit when gcd(t, n) != 1.
Quandle alexander_quandle(int n, int t);
// x * y = f(x y^-1) y on the elements of g.
Quandle galex(const FiniteGroup& g, const GroupAutomorphism& f);

struct ConjugationQuandle {
  Quandle quandle;
  std::vector<int> labels;  // labels[i] = group element denoted by quandle element i
};

ConjugationQuandle conjugation_quandle(const FiniteGroup& g, int x);

struct Extension {
  Quandle quandle;         // element (x, a) has index x * m + a
  QuandleMap projection;   // (x, a) -> x
  int modulus = 1;
};

// (x, a) * (y, b) = (x*y, a + phi(x, y)).
Extension abelian_extension(const Quandle& x, const Cocycle2& phi);

// The same table for an arbitrary cochain, without validation.
Table extension_table(const Quandle& x, const Cochain2& f);

}  // namespace forge
