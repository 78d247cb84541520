#pragma once

// Enveloping groups of quandles and Todd-Coxeter coset enumeration.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "forge/quandle.hpp"

namespace forge {

// Letters are signed 1-based generator indices: +i is x_i, -i is x_i^-1.
using Word = std::vector<int>;

struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
};

// Throws Error on out-of-range letters or empty relators.
void validate_presentation(const Presentation& p);

// n generators and the n^2 relators x_j^-1 x_i x_j x_{i*j}^-1, kept unreduced.
// The finite variant adds x_i^{n_i}, n_i the order of R_i.
Presentation enveloping_presentation(const Quandle& q, bool finite);

inline constexpr std::size_t default_max_cosets = 1'000'000;

// Complete coset table over the trivial subgroup: cosets are group elements
// and generators act by right multiplication. Coset 0 is the identity.
class CosetTable {
 public:
  int size() const { return static_cast<int>(action_.size()); }
  int generators() const { return generators_; }
  // Image of a coset under a signed 1-based letter.
  int act(int coset, int letter) const;
  int trace(int coset, const Word& w) const;
  // Permutation of cosets induced by generator g (0-based).
  Permutation generator_action(int g) const;
  std::size_t cosets_defined() const { return defined_; }

 private:
  friend CosetTable todd_coxeter(const Presentation&, std::size_t);
  int generators_ = 0;
  std::vector<std::vector<int>> action_;  // coset x column (2g: x_g, 2g+1: x_g^-1)
  std::size_t defined_ = 0;
};

// HLT enumeration with coincidence processing. Throws Capped when more than
// max_cosets cosets would be defined.
CosetTable todd_coxeter(const Presentation& p, std::size_t max_cosets = default_max_cosets);

// Every generator column is a permutation and every relator closes at every coset.
bool verify_coset_table(const CosetTable& t, const Presentation& p);

struct RhoResult {
  bool injective = false;
  std::size_t group_order = 0;
  std::optional<std::pair<int, int>> collision;  // i < j with rho(i) = rho(j)
};

// Injectivity of X -> finite enveloping group, decided on the regular action.
RhoResult rho_injective(const Quandle& q, std::size_t max_cosets = default_max_cosets);

enum class Verdict { yes, no, not_applicable };

const char* to_string(Verdict v);

struct ConjugationVerdict {
  Verdict verdict = Verdict::not_applicable;
  std::optional<RhoResult> rho;  // absent for disconnected input
};

ConjugationVerdict is_conjugation_quandle(const Quandle& q, std::size_t max_cosets = default_max_cosets);

// Multiplication table of the group a complete table enumerates. Coset c is the
// element reached from coset 0 by a spanning-tree word.
Table regular_multiplication_table(const CosetTable& t);

}  // namespace forge
