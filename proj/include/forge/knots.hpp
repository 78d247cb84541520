#pragma once

// Knots as braid closures, quandle colorings, and the cocycle state sum.
//
// All strands run downward. A letter +i crosses positions i-1 and i (0-based
// i-1 < i) positively, -i negatively. For incoming colors (a, b) at those
// positions:
//   +i: (a, b) -> (b, a*b),          source pair (a, b),          weight +phi(a, b)
//   -i: (c, d) -> (R_c^-1(d), c),    source pair (R_c^-1(d), c),  weight -phi(R_c^-1(d), c)
// The closure joins bottom position j to top position j. The 1-tangle of a
// knot cuts the closure arc at position 0: b0 is top 0, b1 is bottom 0.

#include <cstdint>
#include <string>
#include <vector>

#include "forge/cohomology.hpp"
#include "forge/quandle.hpp"

namespace forge {

class BraidKnot {
 public:
  const std::string& name() const { return name_; }
  int strands() const { return strands_; }
  const std::vector<int>& word() const { return word_; }
  const std::vector<int>& closure_permutation() const { return closure_; }
  int crossings() const { return static_cast<int>(word_.size()); }

 private:
  friend BraidKnot parse_braid(std::string name, int strands, std::vector<int> word);
  std::string name_;
  int strands_ = 1;
  std::vector<int> word_;
  std::vector<int> closure_;  // top position -> bottom position of the same strand
};

// Throws BadGenerator, or NotAKnot when the closure has several components.
BraidKnot parse_braid(std::string name, int strands, std::vector<int> word);

struct Crossing {
  int source = 0;  // x_tau
  int target = 0;  // y_tau
  int sign = 1;
};

struct Coloring {
  std::vector<int> top;
  std::vector<int> bottom;
  std::vector<Crossing> crossings;
};

// Pushes top colors through the braid, recording source pairs.
Coloring propagate(const Quandle& q, const BraidKnot& k, std::vector<int> top);
// The same for any braid word, closed or not. Throws BadGenerator.
Coloring propagate(const Quandle& q, int strands, const std::vector<int>& word, std::vector<int> top);

struct Tangle {
  BraidKnot knot;
};

inline Tangle tangle_of(BraidKnot k) { return Tangle{std::move(k)}; }

struct GroupRingElt {
  int modulus = 1;
  std::vector<std::uint64_t> coeffs;  // coeffs[j] multiplies u^j

  static GroupRingElt zero(int m) { return GroupRingElt{m, std::vector<std::uint64_t>(m, 0)}; }
  std::uint64_t total() const;
  GroupRingElt& operator+=(const GroupRingElt& other);
  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;
};

std::string to_string(const GroupRingElt& e);
bool is_constant(const GroupRingElt& e);

// Sum of crossing weights of one coloring, in Z_m.
int coloring_weight(const Cocycle2& phi, const Coloring& c);

std::vector<Coloring> enumerate_colorings(const Quandle& q, const BraidKnot& k);
std::vector<Coloring> tangle_colorings(const Quandle& q, const Tangle& t);

// Counting and state-sum kernels. The serial versions are the reference
// implementation; the default versions split the top assignments across
// OpenMP threads and merge by coefficient addition.
std::uint64_t count_colorings_serial(const Quandle& q, const BraidKnot& k);
std::uint64_t count_colorings(const Quandle& q, const BraidKnot& k);
GroupRingElt state_sum_serial(const Quandle& q, const Cocycle2& phi, const BraidKnot& k);
GroupRingElt state_sum(const Quandle& q, const Cocycle2& phi, const BraidKnot& k);

// Every tangle coloring has equal top and bottom colors.
bool end_monochromatic(const Quandle& q, const Tangle& t);
// Relative form for a covering f: every tangle coloring by f.source whose ends
// lie in one fiber has equal ends. For an abelian extension this holds exactly
// when the state sum of its cocycle on the knot is constant.
bool end_monochromatic(const QuandleMap& f, const Tangle& t);
bool check_translation_equality(const Quandle& q, const Tangle& t);

// The unique tangle coloring by f.source lifting c with top color y.
// Throws NotACovering, FiberMismatch.
Coloring lift_coloring(const QuandleMap& f, const Tangle& t, const Coloring& c, int y);

// Bundled braid presentations of knots up to eight crossings. Several names
// carry more than one presentation, distinguished by a suffix.
std::vector<BraidKnot> bundled_knots();

// Limit on |Q|^strands for brute-force enumeration.
inline constexpr std::uint64_t max_assignments = 400'000'000;

}  // namespace forge
