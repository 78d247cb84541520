#pragma once

// Finite quandles as Cayley tables, and their structural properties.
//
// Elements are 0-based indices. table[a][b] holds a*b, so row = left argument,
// and the right translation R_b is column b.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace forge {

using Table = std::vector<std::vector<int>>;

// A bijection on 0..n-1. Products read left to right: (p * q)(x) = q(p(x)),
// the right-action convention under which R_{a*b} = R_b^-1 * R_a * R_b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // throws Error if not a bijection
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& then) const;
  Permutation inverse() const;
  bool is_identity() const;
  long long order() const;
  std::vector<int> cycle_type() const;  // sorted cycle lengths, fixed points included

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Permutation group with its full element list (desk scale).
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // elements[0] is the identity

  std::size_t order() const { return elements.size(); }
};

inline constexpr std::size_t default_group_cap = 10'000'000;

// Closure of the generators under composition.
PermGroup generate_group(int degree, std::vector<Permutation> generators,
                         std::size_t cap = default_group_cap);

class Quandle {
 public:
  int order() const { return n_; }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  // The unique x with x * b = c.
  int left_of(int b, int c) const { return left_[static_cast<std::size_t>(b) * n_ + c]; }

  std::span<const int> flat() const { return table_; }
  Table rows() const;

  friend bool operator==(const Quandle&, const Quandle&) = default;

 private:
  friend Quandle validate_quandle(const Table& table);
  Quandle(int n, std::vector<int> table, std::vector<int> left);

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> left_;  // left_[b * n + c] = R_b^-1(c)
};

// Checks idempotency, right invertibility and right self-distributivity, in that
// order. Throws AxiomViolation with a witness, or ParseError on bad shape/range.
Quandle validate_quandle(const Table& table);

struct QuandleMap {
  Quandle source;
  Quandle target;
  std::vector<int> images;

  bool is_homomorphism() const;
  bool is_surjective() const;
  std::vector<std::vector<int>> fibers() const;  // indexed by target element
};

Permutation right_translation(const Quandle& q, int a);
PermGroup inner_group(const Quandle& q, std::size_t cap = default_group_cap);
std::vector<int> orbit(const Quandle& q, int a);
bool is_connected(const Quandle& q);
bool is_faithful(const Quandle& q);

struct InnImage {
  Quandle quandle;                        // distinct translations under conjugation
  QuandleMap map;                         // x -> R_x
  std::vector<Permutation> translations;  // translations[i] is element i of the image
};

// Element i of the image is the i-th distinct translation in order of first
// occurrence; the operation is R_a * R_b = R_b^-1 R_a R_b (read left to right).
InnImage inn_image(const Quandle& q);

// Throws NotEpimorphism unless f is a surjective homomorphism.
bool is_covering(const QuandleMap& f);

std::optional<QuandleMap> are_isomorphic(const Quandle& q1, const Quandle& q2);

// Element (a, b) has index a * |q2| + b.
Quandle product_quandle(const Quandle& q1, const Quandle& q2);

struct EpimorphismIndex {
  int index = 0;
  bool equal_fibers = false;
};

// Throws NotEpimorphism, or Error when |source| / |target| is not integral.
EpimorphismIndex epimorphism_index(const QuandleMap& f);

QuandleMap identity_map(const Quandle& q);

}  // namespace forge
