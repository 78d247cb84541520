#include "forge/quandle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "forge/errors.hpp"

namespace forge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x]) throw Error("permutation images are not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::operator*(const Permutation& then) const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) p.images_[x] = then.images_[images_[x]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) p.images_[images_[x]] = static_cast<int>(x);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = static_cast<int>(start); !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

long long Permutation::order() const {
  long long result = 1;
  for (int len : cycle_type()) result = std::lcm(result, static_cast<long long>(len));
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

PermGroup generate_group(int degree, std::vector<Permutation> generators, std::size_t cap) {
  PermGroup group;
  group.degree = degree;
  group.generators = std::move(generators);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  group.elements.push_back(Permutation::identity(degree));
  index.emplace(group.elements.front(), 0);
  // Breadth-first over right multiplication by generators; finite groups need no inverses.
  for (std::size_t i = 0; i < group.elements.size(); ++i) {
    for (const auto& g : group.generators) {
      Permutation next = group.elements[i] * g;
      if (index.contains(next)) continue;
      if (group.elements.size() >= cap) throw GroupTooLarge(cap);
      index.emplace(next, group.elements.size());
      group.elements.push_back(std::move(next));
    }
  }
  return group;
}

Quandle::Quandle(int n, std::vector<int> table, std::vector<int> left)
    : n_(n), table_(std::move(table)), left_(std::move(left)) {}

Table Quandle::rows() const {
  Table rows(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) rows[a][b] = op(a, b);
  return rows;
}

Quandle validate_quandle(const Table& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ParseError("quandle of order 0");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) throw ParseError("table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= n) throw ParseError("table entry out of range at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      flat[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * n + b]; };

  for (int a = 0; a < n; ++a)
    if (at(a, a) != a) throw AxiomViolation(Axiom::idempotency, {a, -1, -1});

  std::vector<int> left(static_cast<std::size_t>(n) * n, -1);
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      int& slot = left[static_cast<std::size_t>(b) * n + at(a, b)];
      if (slot != -1) throw AxiomViolation(Axiom::invertibility, {slot, a, b});
      slot = a;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(at(a, c), at(b, c)))
          throw AxiomViolation(Axiom::distributivity, {a, b, c});

  return Quandle(n, std::move(flat), std::move(left));
}

bool QuandleMap::is_homomorphism() const {
  const int n = source.order();
  if (static_cast<int>(images.size()) != n) return false;
  for (int x : images)
    if (x < 0 || x >= target.order()) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images[source.op(a, b)] != target.op(images[a], images[b])) return false;
  return true;
}

bool QuandleMap::is_surjective() const {
  std::vector<char> hit(target.order(), 0);
  for (int x : images) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

std::vector<std::vector<int>> QuandleMap::fibers() const {
  std::vector<std::vector<int>> result(target.order());
  for (int x = 0; x < source.order(); ++x) result[images[x]].push_back(x);
  return result;
}

Permutation right_translation(const Quandle& q, int a) {
  if (a < 0 || a >= q.order()) throw Error("element out of range");
  std::vector<int> images(q.order());
  for (int x = 0; x < q.order(); ++x) images[x] = q.op(x, a);
  return Permutation(std::move(images));
}

PermGroup inner_group(const Quandle& q, std::size_t cap) {
  std::vector<Permutation> gens;
  for (int a = 0; a < q.order(); ++a) {
    Permutation r = right_translation(q, a);
    if (!r.is_identity() && std::find(gens.begin(), gens.end(), r) == gens.end()) gens.push_back(std::move(r));
  }
  return generate_group(q.order(), std::move(gens), cap);
}

std::vector<int> orbit(const Quandle& q, int a) {
  std::vector<char> seen(q.order(), 0);
  std::vector<int> result{a};
  seen[a] = 1;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (int b = 0; b < q.order(); ++b) {
      for (int y : {q.op(result[i], b), q.left_of(b, result[i])}) {
        if (!seen[y]) {
          seen[y] = 1;
          result.push_back(y);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_connected(const Quandle& q) { return static_cast<int>(orbit(q, 0).size()) == q.order(); }

namespace {

bool same_column(const Quandle& q, int a, int b) {
  for (int x = 0; x < q.order(); ++x)
    if (q.op(x, a) != q.op(x, b)) return false;
  return true;
}

}  // namespace

bool is_faithful(const Quandle& q) {
  for (int a = 0; a < q.order(); ++a)
    for (int b = a + 1; b < q.order(); ++b)
      if (same_column(q, a, b)) return false;
  return true;
}

InnImage inn_image(const Quandle& q) {
  const int n = q.order();
  std::vector<Permutation> translations;
  std::unordered_map<Permutation, int, PermutationHash> index;
  std::vector<int> images(n);
  for (int a = 0; a < n; ++a) {
    Permutation r = right_translation(q, a);
    auto [it, inserted] = index.emplace(r, static_cast<int>(translations.size()));
    if (inserted) translations.push_back(std::move(r));
    images[a] = it->second;
  }
  const int k = static_cast<int>(translations.size());
  Table table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Permutation conj = translations[j].inverse() * translations[i] * translations[j];
      auto it = index.find(conj);
      if (it == index.end()) throw Error("translations not closed under conjugation");
      table[i][j] = it->second;
    }
  }
  Quandle image = validate_quandle(table);
  QuandleMap map{q, image, std::move(images)};
  return InnImage{std::move(image), std::move(map), std::move(translations)};
}

bool is_covering(const QuandleMap& f) {
  if (!f.is_homomorphism() || !f.is_surjective()) throw NotEpimorphism("map is not a quandle epimorphism");
  for (const auto& fiber : f.fibers())
    for (std::size_t i = 1; i < fiber.size(); ++i)
      if (!same_column(f.source, fiber[0], fiber[i])) return false;
  return true;
}

namespace {

// Per-element invariants preserved by isomorphisms.
std::vector<std::vector<int>> element_profiles(const Quandle& q) {
  const int n = q.order();
  std::vector<std::vector<int>> profiles(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> p = right_translation(q, a).cycle_type();
    int same = 0;
    for (int b = 0; b < n; ++b) same += same_column(q, a, b) ? 1 : 0;
    int stabilizing = 0;  // translations fixing a
    for (int b = 0; b < n; ++b) stabilizing += q.op(a, b) == a ? 1 : 0;
    p.push_back(-1);
    p.push_back(same);
    p.push_back(stabilizing);
    p.push_back(static_cast<int>(orbit(q, a).size()));
    profiles[a] = std::move(p);
  }
  return profiles;
}

class IsoSearch {
 public:
  IsoSearch(const Quandle& q1, const Quandle& q2)
      : q1_(q1), q2_(q2), prof1_(element_profiles(q1)), prof2_(element_profiles(q2)) {}

  std::optional<std::vector<int>> run() {
    std::vector<int> forward(q1_.order(), -1), backward(q2_.order(), -1);
    if (search(forward, backward)) return forward;
    return std::nullopt;
  }

 private:
  // Assigns i -> j and everything it forces; false on contradiction.
  bool assign(std::vector<int>& fwd, std::vector<int>& bwd, int i, int j) const {
    std::deque<std::pair<int, int>> queue{{i, j}};
    std::vector<int> assigned;
    for (int k = 0; k < q1_.order(); ++k)
      if (fwd[k] != -1) assigned.push_back(k);
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      if (fwd[a] != -1) {
        if (fwd[a] != b) return false;
        continue;
      }
      if (bwd[b] != -1 || prof1_[a] != prof2_[b]) return false;
      fwd[a] = b;
      bwd[b] = a;
      for (int k : assigned) {
        int kb = fwd[k];
        queue.emplace_back(q1_.op(a, k), q2_.op(b, kb));
        queue.emplace_back(q1_.op(k, a), q2_.op(kb, b));
        queue.emplace_back(q1_.left_of(k, a), q2_.left_of(kb, b));
        queue.emplace_back(q1_.left_of(a, k), q2_.left_of(b, kb));
      }
      assigned.push_back(a);
    }
    return true;
  }

  bool search(std::vector<int>& fwd, std::vector<int>& bwd) const {
    auto it = std::find(fwd.begin(), fwd.end(), -1);
    if (it == fwd.end()) return true;
    const int i = static_cast<int>(it - fwd.begin());
    for (int j = 0; j < q2_.order(); ++j) {
      if (bwd[j] != -1 || prof1_[i] != prof2_[j]) continue;
      std::vector<int> f = fwd, b = bwd;
      if (assign(f, b, i, j) && search(f, b)) {
        fwd = std::move(f);
        bwd = std::move(b);
        return true;
      }
    }
    return false;
  }

  const Quandle& q1_;
  const Quandle& q2_;
  std::vector<std::vector<int>> prof1_, prof2_;
};

}  // namespace

std::optional<QuandleMap> are_isomorphic(const Quandle& q1, const Quandle& q2) {
  if (q1.order() != q2.order()) return std::nullopt;
  auto p1 = element_profiles(q1), p2 = element_profiles(q2);
  std::sort(p1.begin(), p1.end());
  std::sort(p2.begin(), p2.end());
  if (p1 != p2) return std::nullopt;
  auto images = IsoSearch(q1, q2).run();
  if (!images) return std::nullopt;
  QuandleMap map{q1, q2, std::move(*images)};
  if (!map.is_homomorphism()) throw Error("isomorphism search returned a non-homomorphism");
  return map;
}

Quandle product_quandle(const Quandle& q1, const Quandle& q2) {
  const int n1 = q1.order(), n2 = q2.order();
  Table table(n1 * n2, std::vector<int>(n1 * n2));
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          table[a1 * n2 + a2][b1 * n2 + b2] = q1.op(a1, b1) * n2 + q2.op(a2, b2);
  return validate_quandle(table);
}

EpimorphismIndex epimorphism_index(const QuandleMap& f) {
  if (!f.is_homomorphism() || !f.is_surjective()) throw NotEpimorphism("map is not a quandle epimorphism");
  const int s = f.source.order(), t = f.target.order();
  if (s % t != 0) throw Error("index " + std::to_string(s) + "/" + std::to_string(t) + " is not integral");
  EpimorphismIndex result;
  result.index = s / t;
  auto fibers = f.fibers();
  result.equal_fibers = std::all_of(fibers.begin(), fibers.end(),
                                    [&](const auto& fiber) { return static_cast<int>(fiber.size()) == result.index; });
  return result;
}

QuandleMap identity_map(const Quandle& q) {
  std::vector<int> images(q.order());
  std::iota(images.begin(), images.end(), 0);
  return QuandleMap{q, q, std::move(images)};
}

}  // namespace forge
