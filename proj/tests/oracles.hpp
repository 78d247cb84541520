#pragma once

// Independent brute-force references and random generators for the tests.
// Nothing here calls the library's algorithms beyond constructing inputs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "forge/quandle.hpp"

namespace oracle {

using forge::Table;

inline bool is_quandle(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    if (t[a][a] != a) return false;
  for (int b = 0; b < n; ++b) {
    std::vector<int> hit(n, 0);
    for (int a = 0; a < n; ++a)
      if (hit[t[a][b]]++) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) return false;
  return true;
}

inline Table relabel(const Table& t, const std::vector<int>& p) {
  const int n = static_cast<int>(t.size());
  Table r(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r[p[a]][p[b]] = p[t[a][b]];
  return r;
}

inline Table canonical(const Table& t) {
  std::vector<int> p(t.size());
  std::iota(p.begin(), p.end(), 0);
  Table best = t;
  do {
    best = std::min(best, relabel(t, p));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// All quandles of order n up to isomorphism: every column is a permutation
// fixing its own index, so search column by column.
inline std::vector<Table> all_quandles(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<Table> found;
  Table t(n, std::vector<int>(n));
  auto fill = [&](auto&& self, int b) -> void {
    if (b == n) {
      if (is_quandle(t)) found.insert(canonical(t));
      return;
    }
    for (const auto& q : perms) {
      if (q[b] != b) continue;
      for (int a = 0; a < n; ++a) t[a][b] = q[a];
      self(self, b + 1);
    }
  };
  fill(fill, 0);
  return {found.begin(), found.end()};
}

inline int mod(long long v, int m) { return static_cast<int>(((v % m) + m) % m); }

// Cocycle condition straight from the definition, on a row-major n x n table.
inline bool cocycle(const Table& t, const std::vector<int>& f, int m) {
  const int n = static_cast<int>(t.size());
  auto at = [&](int x, int y) { return f[x * n + y]; };
  for (int x = 0; x < n; ++x)
    if (mod(at(x, x), m)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mod(static_cast<long long>(at(x, y)) - at(x, z) + at(t[x][y], z) - at(t[x][z], t[y][z]), m)) return false;
  return true;
}

// Number of 2-cocycles, by running through every diagonal-zero function.
inline std::uint64_t count_cocycles(const Table& t, int m) {
  const int n = static_cast<int>(t.size());
  std::vector<int> f(n * n, 0), off;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) off.push_back(x * n + y);
  std::uint64_t count = 0;
  while (true) {
    count += cocycle(t, f, m);
    std::size_t i = 0;
    while (i < off.size() && ++f[off[i]] == m) f[off[i++]] = 0;
    if (i == off.size()) break;
  }
  return count;
}

inline std::uint64_t count_coboundaries(const Table& t, int m) {
  const int n = static_cast<int>(t.size());
  std::set<std::vector<int>> seen;
  std::vector<int> g(n, 0);
  while (true) {
    std::vector<int> f(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) f[x * n + y] = mod(g[x] - g[t[x][y]], m);
    seen.insert(f);
    int i = 0;
    while (i < n && ++g[i] == m) g[i++] = 0;
    if (i == n) break;
  }
  return seen.size();
}

// Knot colorings on arcs: every segment of the braid gets a color and each
// crossing is checked as a relation, never computed forward. At a positive
// crossing the strand leaving position i for i-1 is the over arc and the under
// arc leaves with color (in * over); at a negative crossing the strand leaving
// i-1 for i is the over arc and the outgoing under color u satisfies u * over = in.
// Each coloring contributes u^w, w the signed sum of phi over (under source, over).
// An empty phi counts colorings into coefficient 0.
inline std::vector<std::uint64_t> state_sum(const Table& t, int strands, const std::vector<int>& word,
                                            const std::vector<int>& phi = {}, int m = 1) {
  const int n = static_cast<int>(t.size());
  std::vector<std::uint64_t> coeffs(m, 0);
  std::vector<std::vector<int>> level(word.size() + 1, std::vector<int>(strands));
  auto weight = [&](int x, int y) { return phi.empty() ? 0 : phi[x * n + y]; };
  auto descend = [&](auto&& self, std::size_t k, long long w) -> void {
    if (k == word.size()) {
      if (level[k] == level[0]) ++coeffs[mod(w, m)];
      return;
    }
    const int i = std::abs(word[k]) - 1;
    const auto& in = level[k];
    for (int left = 0; left < n; ++left)
      for (int right = 0; right < n; ++right) {
        long long dw = 0;
        if (word[k] > 0) {
          if (left != in[i + 1] || right != t[in[i]][in[i + 1]]) continue;
          dw = weight(in[i], in[i + 1]);
        } else {
          if (right != in[i] || t[left][in[i]] != in[i + 1]) continue;
          dw = -weight(left, in[i]);
        }
        level[k + 1] = in;
        level[k + 1][i] = left;
        level[k + 1][i + 1] = right;
        self(self, k + 1, w + dw);
      }
  };
  std::vector<int> top(strands, 0);
  while (true) {
    level[0] = top;
    descend(descend, 0, 0);
    int s = 0;
    while (s < strands && ++top[s] == n) top[s++] = 0;
    if (s == strands) break;
  }
  return coeffs;
}

inline std::uint64_t count_colorings(const Table& t, int strands, const std::vector<int>& word) {
  return state_sum(t, strands, word)[0];
}

inline Table random_relabel(const Table& t, std::mt19937& rng) {
  std::vector<int> p(t.size());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return relabel(t, p);
}

inline Table random_table(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  Table t(n, std::vector<int>(n));
  for (auto& row : t)
    for (int& v : row) v = pick(rng);
  return t;
}

// Random braid word on s strands.
inline std::vector<int> random_word(int strands, int length, std::mt19937& rng) {
  std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
  std::vector<int> w;
  for (int i = 0; i < length; ++i) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

}  // namespace oracle
