#include "forge/cohomology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "forge/errors.hpp"
#include "forge/smith.hpp"

namespace forge {

namespace {

int mod(long long v, int m) {
  v %= m;
  return static_cast<int>(v < 0 ? v + m : v);
}

// Off-diagonal pairs (x, y) are the coordinates of the cochain space.
class PairIndex {
 public:
  explicit PairIndex(int n) : n_(n), index_(static_cast<std::size_t>(n) * n, -1) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) {
          index_[static_cast<std::size_t>(x) * n + y] = static_cast<int>(pairs_.size());
          pairs_.emplace_back(x, y);
        }
  }
  int size() const { return static_cast<int>(pairs_.size()); }
  int operator()(int x, int y) const { return index_[static_cast<std::size_t>(x) * n_ + y]; }
  std::pair<int, int> pair(int k) const { return pairs_[k]; }

 private:
  int n_;
  std::vector<int> index_;
  std::vector<std::pair<int, int>> pairs_;
};

// One row per distinct nonzero cocycle relation.
ModMatrix cocycle_relations(const Quandle& q, int m, const PairIndex& idx) {
  const int n = q.order();
  std::set<std::vector<std::pair<int, int>>> rows;
  std::map<int, int> coeff;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        coeff.clear();
        auto term = [&](int a, int b, int sign) {
          if (a != b) coeff[idx(a, b)] += sign;
        };
        term(x, y, +1);
        term(x, z, -1);
        term(q.op(x, y), z, +1);
        term(q.op(x, z), q.op(y, z), -1);
        std::vector<std::pair<int, int>> row;
        for (auto [k, c] : coeff)
          if (mod(c, m) != 0) row.emplace_back(k, mod(c, m));
        if (!row.empty()) rows.insert(std::move(row));
      }
  ModMatrix d(static_cast<int>(rows.size()), idx.size(), m);
  int r = 0;
  for (const auto& row : rows) {
    for (auto [k, c] : row) d.set(r, k, c);
    ++r;
  }
  return d;
}

// Column x is delta(e_x).
ModMatrix coboundary_matrix(const Quandle& q, int m, const PairIndex& idx) {
  const int n = q.order();
  ModMatrix b(idx.size(), n, m);
  for (int k = 0; k < idx.size(); ++k) {
    auto [x, y] = idx.pair(k);
    b.add(k, x, 1);
    b.add(k, q.op(x, y), -1);
  }
  return b;
}

void check_shape(const Quandle& q, const Cochain2& f) {
  if (f.n != q.order()) throw ShapeMismatch("cochain order " + std::to_string(f.n) + " does not match quandle order " + std::to_string(q.order()));
  if (f.m < 1) throw ShapeMismatch("modulus must be positive");
  if (static_cast<int>(f.values.size()) != f.n * f.n) throw ShapeMismatch("cochain has wrong number of values");
}

}  // namespace

Cochain2 Cochain2::zero(int n, int m) { return Cochain2{n, m, std::vector<int>(static_cast<std::size_t>(n) * n, 0)}; }

CocycleCheck is_cocycle(const Quandle& q, const Cochain2& f) {
  check_shape(q, f);
  const int n = q.order(), m = f.m;
  CocycleCheck result;
  for (int x = 0; x < n; ++x)
    if (mod(f.at(x, x), m) != 0) {
      result.ok = false;
      result.diagonal = true;
      result.witness = {x, x, -1};
      return result;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        long long v = static_cast<long long>(f.at(x, y)) - f.at(x, z) + f.at(q.op(x, y), z) - f.at(q.op(x, z), q.op(y, z));
        if (mod(v, m) != 0) {
          result.ok = false;
          result.witness = {x, y, z};
          return result;
        }
      }
  return result;
}

Cocycle2 Cocycle2::checked(const Quandle& q, Cochain2 values) {
  check_shape(q, values);
  for (int& v : values.values) v = mod(v, values.m);
  CocycleCheck check = is_cocycle(q, values);
  if (!check) throw NotACocycle(check.witness, check.diagonal);
  return Cocycle2(std::move(values));
}

Cocycle2 Cocycle2::zero(const Quandle& q, int m) { return Cocycle2(Cochain2::zero(q.order(), m)); }

Cocycle2 coboundary(const Quandle& q, int m, const std::vector<int>& gamma) {
  const int n = q.order();
  if (static_cast<int>(gamma.size()) != n) throw ShapeMismatch("gamma has wrong length");
  Cochain2 f = Cochain2::zero(n, m);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) f.at(x, y) = mod(static_cast<long long>(gamma[x]) - gamma[q.op(x, y)], m);
  return Cocycle2::checked(q, std::move(f));
}

CohomologyGroup second_cohomology(const Quandle& q, int m) {
  if (m < 1) throw Error("modulus must be positive");
  CohomologyGroup h;
  h.modulus = m;
  const int n = q.order();
  PairIndex idx(n);
  const int vars = idx.size();
  if (vars == 0 || m == 1) return h;

  // Cocycles: kernel of the relation matrix, read off its Smith form.
  SmithForm rel = smith_normal_form(cocycle_relations(q, m, idx), {.right = true, .right_inv = true});
  std::vector<int> d(vars, m);
  std::copy(rel.diagonal.begin(), rel.diagonal.end(), d.begin());
  std::vector<int> kept;  // coordinates with nontrivial kernel part
  for (int i = 0; i < vars; ++i)
    if (d[i] > 1) kept.push_back(i);
  for (int i : kept) h.cocycle_factors.push_back(d[i]);
  const int k = static_cast<int>(kept.size());

  ModMatrix cob = coboundary_matrix(q, m, idx);
  for (int s : smith_normal_form(cob).diagonal)
    if (m / s > 1) h.coboundary_factors.push_back(m / s);
  std::sort(h.coboundary_factors.begin(), h.coboundary_factors.end());
  if (k == 0) return h;

  // Presentation of Z / B in kernel coordinates: columns are coboundaries, plus
  // the relations d_i e_i.
  ModMatrix pres(k, n + k, m);
  for (int x = 0; x < n; ++x) {
    std::vector<std::int64_t> w = rel.right_inv.apply(cob.column(x));
    for (int i = 0; i < vars; ++i) {
      if (d[i] == 1 && w[i] != 0) throw Error("coboundary outside cocycle space");
    }
    for (int j = 0; j < k; ++j) {
      int step = m / d[kept[j]];
      if (w[kept[j]] % step != 0) throw Error("coboundary outside cocycle space");
      pres.set(j, x, w[kept[j]] / step);
    }
  }
  for (int j = 0; j < k; ++j) pres.set(j, n + j, d[kept[j]]);

  SmithForm quot = smith_normal_form(pres, {.left_inv = true});
  for (int j = 0; j < k; ++j) {
    int e = std::gcd(quot.diagonal[j], m);
    if (e <= 1) continue;
    h.factors.push_back(e);
    std::vector<std::int64_t> w(vars, 0);
    for (int i = 0; i < k; ++i) {
      int di = d[kept[i]];
      w[kept[i]] = (quot.left_inv(i, j) % di) * (m / di) % m;
    }
    std::vector<std::int64_t> v = rel.right.apply(w);
    Cochain2 f = Cochain2::zero(n, m);
    for (int p = 0; p < vars; ++p) {
      auto [x, y] = idx.pair(p);
      f.at(x, y) = static_cast<int>(v[p]);
    }
    h.representatives.push_back(Cocycle2::checked(q, std::move(f)));
  }
  return h;
}

std::optional<std::vector<int>> coboundary_preimage(const Quandle& q, const Cochain2& f) {
  check_shape(q, f);
  const int n = q.order(), m = f.m;
  for (int x = 0; x < n; ++x)
    if (mod(f.at(x, x), m) != 0) return std::nullopt;
  PairIndex idx(n);
  const int vars = idx.size();
  if (vars == 0 || m == 1) return std::vector<int>(n, 0);

  ModMatrix a = coboundary_matrix(q, m, idx);
  SmithForm snf = smith_normal_form(a, {.left = true, .right = true});
  std::vector<std::int64_t> target(vars);
  for (int p = 0; p < vars; ++p) {
    auto [x, y] = idx.pair(p);
    target[p] = mod(f.at(x, y), m);
  }
  std::vector<std::int64_t> y = snf.left.apply(target);
  std::vector<std::int64_t> w(n, 0);
  const int diag = static_cast<int>(snf.diagonal.size());
  for (int i = 0; i < vars; ++i) {
    if (i >= diag || snf.diagonal[i] == m) {
      if (y[i] != 0) return std::nullopt;
      continue;
    }
    if (y[i] % snf.diagonal[i] != 0) return std::nullopt;
    w[i] = y[i] / snf.diagonal[i];
  }
  std::vector<std::int64_t> g = snf.right.apply(w);
  std::vector<int> gamma(g.begin(), g.end());
  Cochain2 reduced = f;
  for (int& v : reduced.values) v = mod(v, m);
  if (coboundary(q, m, gamma).cochain() != reduced) throw Error("coboundary solve failed verification");
  return gamma;
}

bool cohomologous(const Quandle& q, const Cocycle2& a, const Cocycle2& b) {
  if (a.order() != b.order() || a.modulus() != b.modulus()) throw ShapeMismatch("cocycles have different shapes");
  if (a.order() != q.order()) throw ShapeMismatch("cocycle order does not match quandle");
  Cochain2 diff = a.cochain();
  for (std::size_t i = 0; i < diff.values.size(); ++i) diff.values[i] = mod(static_cast<long long>(diff.values[i]) - b.cochain().values[i], diff.m);
  return coboundary_preimage(q, diff).has_value();
}

Cocycle2 cocycle_power(const Quandle& q, const Cocycle2& psi, int d) {
  const int n = psi.modulus();
  if (d <= 0 || n % d != 0) throw DNotDividesModulus(d, n);
  const int m = n / d;
  // d * psi takes values in dZ_n, and d*v <-> v mod m identifies dZ_n with Z_m.
  Cochain2 f = psi.cochain();
  f.m = m;
  for (int& v : f.values) v %= m;
  return Cocycle2::checked(q, std::move(f));
}

std::optional<std::uint64_t> group_order(const std::vector<int>& factors) {
  std::uint64_t order = 1;
  for (int f : factors) {
    if (order > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(f)) return std::nullopt;
    order *= static_cast<std::uint64_t>(f);
  }
  return order;
}

}  // namespace forge
