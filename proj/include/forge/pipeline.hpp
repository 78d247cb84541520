#pragma once

// End-to-end checks relating extensions, inner representations, conjugation
// quandles and the cocycle invariant, plus the built-in quandle corpus.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "forge/cohomology.hpp"
#include "forge/constructions.hpp"
#include "forge/groups.hpp"
#include "forge/knots.hpp"
#include "forge/quandle.hpp"

namespace forge {

// Q_0 -> Q_1 = inn(Q_0) -> ... until a faithful quandle is reached.
struct InnSequence {
  std::vector<Quandle> quandles;
  std::vector<QuandleMap> maps;  // maps[j]: quandles[j] -> quandles[j + 1]
  bool terminal_faithful = false;

  int length() const { return static_cast<int>(maps.size()); }
};

InnSequence inn_sequence(const Quandle& q);

// g after f. Throws ShapeMismatch when the target of f is not the source of g.
QuandleMap compose(const QuandleMap& f, const QuandleMap& g);

struct Index2Recovery {
  Cocycle2 cocycle;         // on f.target, mod 2
  QuandleMap isomorphism;   // E(f.target, Z_2, cocycle) -> f.source
};

// Labels each fiber by its least element (level 0) and reads the cocycle off
// the levels of products. Throws NotEpimorphism, NotACovering, NotIndex2, or
// ExtensionLawFails with witness (a, b, x, z).
Index2Recovery recover_index2_cocycle(const QuandleMap& f);

struct FiberWitness {
  Permutation beta;
  int fixed = -1;
  int moved = -1;
};

struct FiberCriterion {
  bool holds = true;
  std::size_t inn_order = 0;
  std::optional<FiberWitness> witness;  // the first failing element of Inn(source)
};

// Whether every inner automorphism fixing a point of a fiber fixes that fiber
// pointwise. A witness shows f is not an abelian extension.
// Throws NotEpimorphism, GroupTooLarge.
FiberCriterion fiber_criterion_serial(const QuandleMap& f, std::size_t cap = default_group_cap);
FiberCriterion fiber_criterion(const QuandleMap& f, std::size_t cap = default_group_cap);

struct KnotInvariant {
  std::string knot;
  GroupRingElt value;
  bool constant = false;
};

std::vector<KnotInvariant> invariants(const Quandle& q, const Cocycle2& phi, const std::vector<BraidKnot>& knots);

struct ExtensionVerdict {
  Quandle base;
  int modulus = 1;
  Cocycle2 cocycle;
  Extension extension;
  Verdict is_conjugation = Verdict::not_applicable;
  std::optional<RhoResult> rho{};
  std::size_t enveloping_order = 0;
  bool inn_preimage_found = false;
  std::optional<Quandle> inn_preimage{};  // Y with inn(Y) isomorphic to the extension
  bool invariant_constant_on_corpus = false;
  std::vector<KnotInvariant> invariants{};
  bool end_monochromatic_checked = false;

  bool hypothesis_holds() const { return is_conjugation == Verdict::yes; }
};

struct PipelineOptions {
  std::size_t max_cosets = default_max_cosets;
  // Compare end-monochromatic tangles of the extension with constancy, knot by
  // knot, and treat disagreement as a violation.
  bool cross_check = true;
  // Upper bound on the order of the finite enveloping group used to build an
  // explicit inn preimage.
  std::size_t max_preimage_order = 2000;
};

// Throws TheoremViolation when the extension is a conjugation quandle and some
// invariant is not constant, or when the cross-check disagrees. Throws Capped.
ExtensionVerdict theorem31_pipeline(const Quandle& x, const Cocycle2& phi, const std::vector<BraidKnot>& knots,
                                    const PipelineOptions& options = {});

struct Theorem35Report {
  int n = 1;
  int d = 1;
  int m = 1;
  std::vector<KnotInvariant> psi_invariants;
  ExtensionVerdict verdict;
  bool hypothesis_holds = false;
  bool vanishing_observed = false;  // a_k = 0 for k not divisible by m, on every knot
};

// Throws DNotDividesModulus, TheoremViolation.
Theorem35Report theorem35_check(const Quandle& x, const Cocycle2& psi, int d, const std::vector<BraidKnot>& knots,
                                const PipelineOptions& options = {});

struct NegativeCertificate {
  bool issued = false;
  std::string knot;           // first knot with a non-constant invariant
  std::optional<GroupRingElt> value;
  std::optional<Verdict> conjugation;  // empty when enumeration hit the cap
  std::optional<std::size_t> enveloping_order;
  bool consistent = true;     // never issued together with a yes verdict
};

NegativeCertificate negative_certificates(const Quandle& x, const Cocycle2& phi, const std::vector<BraidKnot>& knots,
                                          std::size_t max_cosets = default_max_cosets);

// Y = GAlex(G, conjugation by rho(e)), G the finite enveloping group of a
// connected conjugation quandle e. Checks inn(Y) against the input and
// returns empty on mismatch or when G exceeds max_order.
std::optional<Quandle> inn_preimage(const Quandle& e, std::size_t max_order, std::size_t max_cosets = default_max_cosets);

struct CorpusEntry {
  std::string name;
  Quandle quandle;
};

// Trivial quandles of order <= 3, dihedral and Alexander quandles of order <= 9,
// conjugacy classes of S3 and S4, GAlex over S3 and S4 with inner
// automorphisms, and the tetrahedral quandle.
std::vector<CorpusEntry> builtin_corpus();

Quandle tetrahedral_quandle();

struct ExtensionCase {
  std::string name;
  Quandle base;
  Cocycle2 cocycle;
};

// For each corpus quandle of order <= max_base and each modulus, the zero
// cocycle and every cohomology representative.
std::vector<ExtensionCase> extension_corpus(int max_base, const std::vector<int>& moduli);

}  // namespace forge
