#include "forge/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "forge/errors.hpp"

namespace forge {

FiniteGroup FiniteGroup::from_table(const Table& mul, std::vector<std::string> labels) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw ParseError("group of order 0");
  FiniteGroup g;
  g.n_ = n;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n) throw ParseError("group table row has wrong length");
    for (int b = 0; b < n; ++b) {
      if (mul[a][b] < 0 || mul[a][b] >= n) throw ParseError("group table entry out of range");
      g.mul_[static_cast<std::size_t>(a) * n + b] = mul[a][b];
    }
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = g.mul(a, b) == b && g.mul(b, a) == b;
    if (ok) e = a;
  }
  if (e < 0) throw Error("group table has no identity");
  g.identity_ = e;
  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == e && g.mul(b, a) == e) g.inv_[a] = b;
    if (g.inv_[a] < 0) throw Error("group element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) throw Error("group table is not associative");
  if (!labels.empty() && static_cast<int>(labels.size()) != n) throw ParseError("label count mismatch");
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  Table mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return from_table(mul, std::move(labels));
}

namespace {

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> result;
  do result.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return result;
}

std::string cycle_label(const std::vector<int>& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    for (int x = static_cast<int>(i); !seen[x]; x = p[x]) {
      seen[x] = 1;
      s += std::to_string(x);
      if (!seen[p[x]]) s += " ";
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace

int symmetric_element(const std::vector<int>& images) {
  // Lexicographic rank.
  const int k = static_cast<int>(images.size());
  int rank = 0;
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j) smaller += images[j] < images[i] ? 1 : 0;
    int fact = 1;
    for (int f = 2; f < k - i; ++f) fact *= f;
    rank += smaller * fact;
  }
  return rank;
}

FiniteGroup FiniteGroup::symmetric(int k) {
  if (k < 1 || k > 5) throw Error("symmetric groups are supported up to degree 5");
  auto perms = all_permutations(k);
  const int n = static_cast<int>(perms.size());
  Table mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = cycle_label(perms[a]);
    for (int b = 0; b < n; ++b) {
      // Left to right: apply a, then b.
      std::vector<int> c(k);
      for (int x = 0; x < k; ++x) c[x] = perms[b][perms[a][x]];
      mul[a][b] = symmetric_element(c);
    }
  }
  return from_table(mul, std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order();
  Table mul(ng * nh, std::vector<int>(ng * nh));
  std::vector<std::string> labels(ng * nh);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b) {
      std::string la = g.labels().empty() ? std::to_string(a) : g.labels()[a];
      std::string lb = h.labels().empty() ? std::to_string(b) : h.labels()[b];
      labels[a * nh + b] = "(" + la + ", " + lb + ")";
      for (int c = 0; c < ng; ++c)
        for (int d = 0; d < nh; ++d) mul[a * nh + b][c * nh + d] = g.mul(a, c) * nh + h.mul(b, d);
    }
  return from_table(mul, std::move(labels));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Table FiniteGroup::table() const {
  Table t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

GroupAutomorphism::GroupAutomorphism(const FiniteGroup& g, std::vector<int> images) : images_(std::move(images)) {
  const int n = g.order();
  if (static_cast<int>(images_.size()) != n) throw Error("automorphism has wrong length");
  std::vector<char> seen(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[x]) throw Error("automorphism is not a bijection");
    seen[x] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images_[g.mul(a, b)] != g.mul(images_[a], images_[b])) throw Error("map is not a group homomorphism");
}

GroupAutomorphism GroupAutomorphism::identity(const FiniteGroup& g) {
  std::vector<int> images(g.order());
  std::iota(images.begin(), images.end(), 0);
  return GroupAutomorphism(g, std::move(images));
}

GroupAutomorphism GroupAutomorphism::inversion(const FiniteGroup& g) {
  std::vector<int> images(g.order());
  for (int a = 0; a < g.order(); ++a) images[a] = g.inv(a);
  return GroupAutomorphism(g, std::move(images));
}

GroupAutomorphism GroupAutomorphism::conjugation(const FiniteGroup& g, int x) {
  std::vector<int> images(g.order());
  for (int a = 0; a < g.order(); ++a) images[a] = g.conj(a, x);
  return GroupAutomorphism(g, std::move(images));
}

Quandle trivial_quandle(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) std::fill(t[a].begin(), t[a].end(), a);
  return validate_quandle(t);
}

Quandle dihedral_quandle(int n) {
  if (n < 1) throw Error("dihedral quandle needs n >= 1");
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
  return validate_quandle(t);
}

Quandle alexander_quandle(int n, int t) {
  if (n < 1) throw Error("alexander quandle needs n >= 1");
  const int tt = ((t % n) + n) % n;
  if (std::gcd(tt, n) != 1 && n > 1) throw NotAUnit(std::to_string(t) + " is not a unit mod " + std::to_string(n));
  const int s = ((1 - tt) % n + n) % n;
  Table table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = static_cast<int>((static_cast<long long>(tt) * a + static_cast<long long>(s) * b) % n);
  return validate_quandle(table);
}

Quandle galex(const FiniteGroup& g, const GroupAutomorphism& f) {
  const int n = g.order();
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = g.mul(f(g.mul(x, g.inv(y))), y);
  return validate_quandle(t);
}

ConjugationQuandle conjugation_quandle(const FiniteGroup& g, int x) {
  std::vector<int> cls;
  std::vector<char> in(g.order(), 0);
  for (int h = 0; h < g.order(); ++h) {
    int c = g.conj(x, h);
    if (!in[c]) {
      in[c] = 1;
      cls.push_back(c);
    }
  }
  std::sort(cls.begin(), cls.end());
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < cls.size(); ++i) index[cls[i]] = static_cast<int>(i);
  const int k = static_cast<int>(cls.size());
  Table t(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a][b] = index[g.conj(cls[a], cls[b])];
  return ConjugationQuandle{validate_quandle(t), std::move(cls)};
}

Table extension_table(const Quandle& x, const Cochain2& f) {
  const int n = x.order(), m = f.m;
  if (f.n != n) throw ShapeMismatch("cochain order does not match quandle");
  Table t(n * m, std::vector<int>(n * m));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i)
      for (int b = 0; b < n; ++b)
        for (int j = 0; j < m; ++j) t[a * m + i][b * m + j] = x.op(a, b) * m + (i + f.at(a, b)) % m;
  return t;
}

Extension abelian_extension(const Quandle& x, const Cocycle2& phi) {
  if (phi.order() != x.order()) throw ShapeMismatch("cocycle order does not match quandle");
  // Cocycle2 carries no quandle identity, so re-check against this one.
  Cocycle2 verified = Cocycle2::checked(x, phi.cochain());
  const int m = verified.modulus();
  Quandle e = validate_quandle(extension_table(x, verified.cochain()));
  std::vector<int> images(e.order());
  for (int k = 0; k < e.order(); ++k) images[k] = k / m;
  QuandleMap projection{e, x, std::move(images)};
  return Extension{std::move(e), std::move(projection), m};
}

}  // namespace forge
