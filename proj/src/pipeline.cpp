#include "forge/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "forge/errors.hpp"

namespace forge {

InnSequence inn_sequence(const Quandle& q) {
  InnSequence seq;
  seq.quandles.push_back(q);
  while (!is_faithful(seq.quandles.back())) {
    InnImage img = inn_image(seq.quandles.back());
    seq.maps.push_back(img.map);
    seq.quandles.push_back(img.quandle);
  }
  seq.terminal_faithful = true;
  return seq;
}

QuandleMap compose(const QuandleMap& f, const QuandleMap& g) {
  if (!(f.target == g.source)) throw ShapeMismatch("maps do not compose");
  std::vector<int> images(f.source.order());
  for (int i = 0; i < f.source.order(); ++i) images[i] = g.images[f.images[i]];
  return QuandleMap{f.source, g.target, std::move(images)};
}

Index2Recovery recover_index2_cocycle(const QuandleMap& f) {
  if (!is_covering(f)) throw NotACovering("map is not a covering");
  EpimorphismIndex idx = epimorphism_index(f);
  if (idx.index != 2 || !idx.equal_fibers) throw NotIndex2("map does not have index 2 with equal fibers");
  const Quandle& x = f.target;
  const Quandle& y = f.source;
  const int n = x.order();
  const auto fibers = f.fibers();  // ascending, so fibers[x][0] is the section
  std::vector<int> level(y.order());
  for (int v = 0; v < n; ++v) {
    level[fibers[v][0]] = 0;
    level[fibers[v][1]] = 1;
  }
  Cochain2 phi = Cochain2::zero(n, 2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) phi.at(a, b) = level[y.op(fibers[a][0], fibers[b][0])];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (y.op(fibers[u][a], fibers[v][b]) != fibers[x.op(u, v)][(a + phi.at(u, v)) % 2])
            throw ExtensionLawFails({a, b, u, v});
  Cocycle2 cocycle = Cocycle2::checked(x, std::move(phi));
  Extension e = abelian_extension(x, cocycle);
  std::vector<int> images(e.quandle.order());
  for (int u = 0; u < n; ++u)
    for (int a = 0; a < 2; ++a) images[u * 2 + a] = fibers[u][a];
  QuandleMap iso{e.quandle, y, std::move(images)};
  if (!iso.is_homomorphism()) throw Error("recovered labeling is not an isomorphism");
  return Index2Recovery{std::move(cocycle), std::move(iso)};
}

namespace {

void require_epimorphism(const QuandleMap& f) {
  if (!f.is_homomorphism() || !f.is_surjective()) throw NotEpimorphism("map is not a surjective homomorphism");
}

// Element id of the fiber of each point, and a fixed/moved pair for beta if one exists.
std::optional<std::pair<int, int>> fiber_violation(const Permutation& beta, const std::vector<std::vector<int>>& fibers) {
  for (const auto& fiber : fibers) {
    int fixed = -1, moved = -1;
    for (int p : fiber) {
      if (beta(p) == p) {
        if (fixed < 0) fixed = p;
      } else if (moved < 0) {
        moved = p;
      }
    }
    if (fixed >= 0 && moved >= 0) return std::make_pair(fixed, moved);
  }
  return std::nullopt;
}

FiberCriterion finish(const PermGroup& inn, const std::vector<std::vector<int>>& fibers, std::size_t first) {
  FiberCriterion result;
  result.inn_order = inn.order();
  if (first == std::numeric_limits<std::size_t>::max()) return result;
  auto v = fiber_violation(inn.elements[first], fibers);
  result.holds = false;
  result.witness = FiberWitness{inn.elements[first], v->first, v->second};
  return result;
}

}  // namespace

FiberCriterion fiber_criterion_serial(const QuandleMap& f, std::size_t cap) {
  require_epimorphism(f);
  PermGroup inn = inner_group(f.source, cap);
  const auto fibers = f.fibers();
  std::size_t first = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < inn.order(); ++i)
    if (fiber_violation(inn.elements[i], fibers)) {
      first = i;
      break;
    }
  return finish(inn, fibers, first);
}

FiberCriterion fiber_criterion(const QuandleMap& f, std::size_t cap) {
  require_epimorphism(f);
  PermGroup inn = inner_group(f.source, cap);
  const auto fibers = f.fibers();
  const long long count = static_cast<long long>(inn.order());
  long long first = std::numeric_limits<long long>::max();
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first)
  for (long long i = 0; i < count; ++i)
    if (i < first && fiber_violation(inn.elements[i], fibers)) first = i;
  return finish(inn, fibers, first == std::numeric_limits<long long>::max() ? std::numeric_limits<std::size_t>::max()
                                                                             : static_cast<std::size_t>(first));
}

std::vector<KnotInvariant> invariants(const Quandle& q, const Cocycle2& phi, const std::vector<BraidKnot>& knots) {
  std::vector<KnotInvariant> result;
  for (const BraidKnot& k : knots) {
    GroupRingElt v = state_sum(q, phi, k);
    bool c = is_constant(v);
    result.push_back({k.name(), std::move(v), c});
  }
  return result;
}

std::optional<Quandle> inn_preimage(const Quandle& e, std::size_t max_order, std::size_t max_cosets) {
  CosetTable table = todd_coxeter(enveloping_presentation(e, true), max_cosets);
  if (static_cast<std::size_t>(table.size()) > max_order) return std::nullopt;
  FiniteGroup g = FiniteGroup::from_table(regular_multiplication_table(table));
  // Coset c is the element reached from the identity coset, so rho(e_0) is act(0, x_1).
  Quandle y = galex(g, GroupAutomorphism::conjugation(g, table.act(0, 1)));
  if (!are_isomorphic(inn_image(y).quandle, e)) return std::nullopt;
  return y;
}

ExtensionVerdict theorem31_pipeline(const Quandle& x, const Cocycle2& phi, const std::vector<BraidKnot>& knots,
                                    const PipelineOptions& options) {
  Extension e = abelian_extension(x, phi);
  ConjugationVerdict cv = is_conjugation_quandle(e.quandle, options.max_cosets);
  ExtensionVerdict v{.base = x, .modulus = phi.modulus(), .cocycle = phi, .extension = e};
  v.is_conjugation = cv.verdict;
  v.rho = cv.rho;
  if (cv.rho) v.enveloping_order = cv.rho->group_order;
  if (v.hypothesis_holds() && v.enveloping_order <= options.max_preimage_order) {
    v.inn_preimage = inn_preimage(e.quandle, options.max_preimage_order, options.max_cosets);
    v.inn_preimage_found = v.inn_preimage.has_value();
  }
  v.invariants = invariants(x, phi, knots);
  v.invariant_constant_on_corpus =
      std::all_of(v.invariants.begin(), v.invariants.end(), [](const KnotInvariant& k) { return k.constant; });
  if (options.cross_check) {
    for (std::size_t i = 0; i < knots.size(); ++i)
      if (end_monochromatic(e.projection, tangle_of(knots[i])) != v.invariants[i].constant)
        throw TheoremViolation("end-monochromatic test disagrees with constancy on " + knots[i].name());
    v.end_monochromatic_checked = true;
  }
  if (v.hypothesis_holds() && !v.invariant_constant_on_corpus) {
    for (const auto& k : v.invariants)
      if (!k.constant)
        throw TheoremViolation("extension is a conjugation quandle but the invariant of " + k.knot +
                               " is not constant: " + to_string(k.value));
  }
  return v;
}

Theorem35Report theorem35_check(const Quandle& x, const Cocycle2& psi, int d, const std::vector<BraidKnot>& knots,
                                const PipelineOptions& options) {
  const int n = psi.modulus();
  Cocycle2 phi = cocycle_power(x, psi, d);
  const int m = n / d;
  std::vector<KnotInvariant> psi_inv = invariants(x, psi, knots);
  ExtensionVerdict verdict = theorem31_pipeline(x, phi, knots, options);
  bool vanishing = true;
  for (const auto& k : psi_inv)
    for (int j = 0; j < n; ++j)
      if (j % m != 0 && k.value.coeffs[j] != 0) vanishing = false;
  const bool hypothesis = verdict.hypothesis_holds();
  if (hypothesis && !vanishing) {
    for (const auto& k : psi_inv)
      for (int j = 0; j < n; ++j)
        if (j % m != 0 && k.value.coeffs[j] != 0)
          throw TheoremViolation("coefficient of u^" + std::to_string(j) + " in the invariant of " + k.knot +
                                 " is nonzero although the extension mod " + std::to_string(m) +
                                 " is a conjugation quandle");
  }
  return Theorem35Report{n, d, m, std::move(psi_inv), std::move(verdict), hypothesis, vanishing};
}

NegativeCertificate negative_certificates(const Quandle& x, const Cocycle2& phi, const std::vector<BraidKnot>& knots,
                                          std::size_t max_cosets) {
  NegativeCertificate cert;
  for (const BraidKnot& k : knots) {
    GroupRingElt v = state_sum(x, phi, k);
    if (!is_constant(v)) {
      cert.issued = true;
      cert.knot = k.name();
      cert.value = std::move(v);
      break;
    }
  }
  Extension e = abelian_extension(x, phi);
  try {
    ConjugationVerdict cv = is_conjugation_quandle(e.quandle, max_cosets);
    cert.conjugation = cv.verdict;
    if (cv.rho) cert.enveloping_order = cv.rho->group_order;
  } catch (const Capped&) {
  }
  cert.consistent = !(cert.issued && cert.conjugation == Verdict::yes);
  return cert;
}

Quandle tetrahedral_quandle() {
  FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  // (a, b) -> (b, a + b), of order 3.
  std::vector<int> images(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) images[a * 2 + b] = b * 2 + (a + b) % 2;
  return galex(v4, GroupAutomorphism(v4, images));
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> corpus;
  for (int n = 1; n <= 3; ++n) corpus.push_back({"trivial(" + std::to_string(n) + ")", trivial_quandle(n)});
  for (int n = 3; n <= 9; ++n) corpus.push_back({"dihedral(" + std::to_string(n) + ")", dihedral_quandle(n)});
  for (int n = 3; n <= 9; ++n)
    for (int t = 2; t < n - 1; ++t)
      if (std::gcd(t, n) == 1)
        corpus.push_back({"alexander(" + std::to_string(n) + "," + std::to_string(t) + ")", alexander_quandle(n, t)});
  corpus.push_back({"tetrahedral", tetrahedral_quandle()});

  struct Rep {
    const char* name;
    std::vector<int> images;
  };
  const std::vector<Rep> s3 = {{"(0 1)", {1, 0, 2}}, {"(0 1 2)", {1, 2, 0}}};
  const std::vector<Rep> s4 = {
      {"(0 1)", {1, 0, 2, 3}}, {"(0 1 2)", {1, 2, 0, 3}}, {"(0 1 2 3)", {1, 2, 3, 0}}, {"(0 1)(2 3)", {1, 0, 3, 2}}};
  for (const auto& [label, group, reps] :
       {std::tuple{"S3", FiniteGroup::symmetric(3), s3}, std::tuple{"S4", FiniteGroup::symmetric(4), s4}}) {
    for (const Rep& r : reps) {
      int x = symmetric_element(r.images);
      corpus.push_back({std::string("conj(") + label + "," + r.name + ")", conjugation_quandle(group, x).quandle});
      corpus.push_back({std::string("galex(") + label + ",conj" + r.name + ")",
                        galex(group, GroupAutomorphism::conjugation(group, x))});
    }
  }
  return corpus;
}

std::vector<ExtensionCase> extension_corpus(int max_base, const std::vector<int>& moduli) {
  std::vector<ExtensionCase> cases;
  for (const CorpusEntry& entry : builtin_corpus()) {
    if (entry.quandle.order() > max_base) continue;
    for (int m : moduli) {
      std::string prefix = entry.name + "/Z" + std::to_string(m);
      cases.push_back({prefix + "/zero", entry.quandle, Cocycle2::zero(entry.quandle, m)});
      CohomologyGroup h = second_cohomology(entry.quandle, m);
      for (std::size_t i = 0; i < h.representatives.size(); ++i)
        cases.push_back({prefix + "/rep" + std::to_string(i), entry.quandle, h.representatives[i]});
    }
  }
  return cases;
}

}  // namespace forge
