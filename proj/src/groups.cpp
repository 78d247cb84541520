#include "forge/groups.hpp"

#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_map>

#include "forge/errors.hpp"

namespace forge {

namespace {

// Column of a signed 1-based letter; the inverse letter is col ^ 1.
int column_of(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t cap) : cols_(2 * p.generators), cap_(cap) {
    for (const Word& w : p.relators) {
      std::vector<int> r;
      for (int letter : w) r.push_back(column_of(letter));
      relators_.push_back(std::move(r));
    }
  }

  void run() {
    new_coset();
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      if (parent_[c] != c) continue;
      for (const auto& r : relators_) {
        scan_and_fill(c, r);
        if (parent_[c] != c) break;
      }
      if (parent_[c] != c) continue;
      for (int x = 0; x < cols_; ++x)
        if (table_[c][x] < 0) define(c, x);
    }
  }

  std::vector<std::vector<int>> compact() const {
    std::vector<int> renumber(table_.size(), -1);
    int live = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (parent_[c] == static_cast<int>(c)) renumber[c] = live++;
    std::vector<std::vector<int>> result;
    result.reserve(live);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (renumber[c] < 0) continue;
      std::vector<int> row(cols_);
      for (int x = 0; x < cols_; ++x) {
        int target = table_[c][x];
        if (target < 0 || renumber[target] < 0) throw Error("coset table incomplete after enumeration");
        row[x] = renumber[target];
      }
      result.push_back(std::move(row));
    }
    return result;
  }

  std::size_t defined() const { return table_.size(); }

 private:
  int new_coset() {
    if (table_.size() >= cap_) throw Capped(cap_);
    table_.emplace_back(cols_, -1);
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int c, int x) {
    int d = new_coset();
    table_[c][x] = d;
    table_[d][x ^ 1] = c;
  }

  int rep(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int e = queue_.front();
      queue_.pop_front();
      for (int x = 0; x < cols_; ++x) {
        int f = table_[e][x];
        if (f < 0) continue;
        table_[f][x ^ 1] = -1;
        int e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] >= 0) {
          merge(f1, table_[e1][x]);
        } else if (table_[f1][x ^ 1] >= 0) {
          merge(e1, table_[f1][x ^ 1]);
        } else {
          table_[e1][x] = f1;
          table_[f1][x ^ 1] = e1;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][w[j] ^ 1] >= 0) b = table_[b][w[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][w[i] ^ 1] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int cols_;
  std::size_t cap_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<int> queue_;
};

}  // namespace

void validate_presentation(const Presentation& p) {
  if (p.generators < 0) throw Error("negative generator count");
  for (const Word& w : p.relators) {
    if (w.empty()) throw Error("empty relator");
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > p.generators) throw Error("relator letter " + std::to_string(letter) + " out of range");
  }
}

Presentation enveloping_presentation(const Quandle& q, bool finite) {
  const int n = q.order();
  Presentation p;
  p.generators = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.relators.push_back({-(j + 1), i + 1, j + 1, -(q.op(i, j) + 1)});
  if (finite) {
    for (int i = 0; i < n; ++i) {
      long long order = right_translation(q, i).order();
      p.relators.push_back(Word(static_cast<std::size_t>(order), i + 1));
    }
  }
  return p;
}

int CosetTable::act(int coset, int letter) const { return action_[coset][column_of(letter)]; }

int CosetTable::trace(int coset, const Word& w) const {
  for (int letter : w) coset = act(coset, letter);
  return coset;
}

Permutation CosetTable::generator_action(int g) const {
  std::vector<int> images(action_.size());
  for (std::size_t c = 0; c < action_.size(); ++c) images[c] = action_[c][2 * g];
  return Permutation(std::move(images));
}

CosetTable todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets < 1) throw Error("max_cosets must be at least 1");
  validate_presentation(p);
  Enumerator e(p, max_cosets);
  e.run();
  CosetTable t;
  t.generators_ = p.generators;
  t.action_ = e.compact();
  t.defined_ = e.defined();
  return t;
}

bool verify_coset_table(const CosetTable& t, const Presentation& p) {
  for (int g = 0; g < t.generators(); ++g) {
    std::vector<char> hit(t.size(), 0);
    for (int c = 0; c < t.size(); ++c) {
      int d = t.act(c, g + 1);
      if (d < 0 || d >= t.size() || hit[d] || t.act(d, -(g + 1)) != c) return false;
      hit[d] = 1;
    }
  }
  for (int c = 0; c < t.size(); ++c)
    for (const Word& w : p.relators)
      if (t.trace(c, w) != c) return false;
  return true;
}

RhoResult rho_injective(const Quandle& q, std::size_t max_cosets) {
  Presentation p = enveloping_presentation(q, true);
  CosetTable t = todd_coxeter(p, max_cosets);
  RhoResult result;
  result.group_order = static_cast<std::size_t>(t.size());
  std::unordered_map<Permutation, int, PermutationHash> seen;
  for (int i = 0; i < q.order(); ++i) {
    auto [it, inserted] = seen.emplace(t.generator_action(i), i);
    if (!inserted) {
      result.collision = std::make_pair(it->second, i);
      return result;
    }
  }
  result.injective = true;
  return result;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

ConjugationVerdict is_conjugation_quandle(const Quandle& q, std::size_t max_cosets) {
  ConjugationVerdict v;
  if (!is_connected(q)) return v;
  v.rho = rho_injective(q, max_cosets);
  v.verdict = v.rho->injective ? Verdict::yes : Verdict::no;
  return v;
}

Table regular_multiplication_table(const CosetTable& t) {
  const int n = t.size();
  std::vector<Word> word(n);
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int g = 1; g <= t.generators(); ++g)
      for (int letter : {g, -g}) {
        int d = t.act(c, letter);
        if (seen[d]) continue;
        seen[d] = 1;
        word[d] = word[c];
        word[d].push_back(letter);
        queue.push_back(d);
      }
  }
  Table mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = t.trace(a, word[b]);
  return mul;
}

}  // namespace forge
