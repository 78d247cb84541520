#include "forge/knots.hpp"

#include <cstdlib>
#include <numeric>

#include "forge/errors.hpp"

namespace forge {

BraidKnot parse_braid(std::string name, int strands, std::vector<int> word) {
  if (strands < 1) throw BadGenerator("braid needs at least one strand");
  for (int g : word)
    if (g == 0 || std::abs(g) > strands - 1)
      throw BadGenerator("generator " + std::to_string(g) + " invalid on " + std::to_string(strands) + " strands");
  // position[j] tracks the strand entering at top position j.
  std::vector<int> position(strands);
  std::iota(position.begin(), position.end(), 0);
  std::vector<int> at(position);  // at[p] = strand currently at position p
  for (int g : word) {
    int i = std::abs(g) - 1;
    std::swap(at[i], at[i + 1]);
    position[at[i]] = i;
    position[at[i + 1]] = i + 1;
  }
  int cycle = 0;
  for (int x = 0;;) {
    x = position[x];
    ++cycle;
    if (x == 0) break;
  }
  if (cycle != strands)
    throw NotAKnot("closure of " + name + " has more than one component");
  BraidKnot k;
  k.name_ = std::move(name);
  k.strands_ = strands;
  k.word_ = std::move(word);
  k.closure_ = std::move(position);
  return k;
}

Coloring propagate(const Quandle& q, const BraidKnot& k, std::vector<int> top) {
  return propagate(q, k.strands(), k.word(), std::move(top));
}

Coloring propagate(const Quandle& q, int strands, const std::vector<int>& word, std::vector<int> top) {
  if (static_cast<int>(top.size()) != strands) throw ShapeMismatch("top colors do not match the strand count");
  for (int g : word)
    if (g == 0 || std::abs(g) >= strands) throw BadGenerator("generator " + std::to_string(g) + " out of range");
  Coloring c;
  c.top = top;
  c.crossings.reserve(word.size());
  for (int g : word) {
    int i = std::abs(g) - 1;
    int a = top[i], b = top[i + 1];
    if (g > 0) {
      c.crossings.push_back({a, b, +1});
      top[i] = b;
      top[i + 1] = q.op(a, b);
    } else {
      int x = q.left_of(a, b);
      c.crossings.push_back({x, a, -1});
      top[i] = x;
      top[i + 1] = a;
    }
  }
  c.bottom = std::move(top);
  return c;
}

std::uint64_t GroupRingElt::total() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::uint64_t{0}); }

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& other) {
  if (other.modulus != modulus) throw ShapeMismatch("group ring elements over different moduli");
  for (int j = 0; j < modulus; ++j) coeffs[j] += other.coeffs[j];
  return *this;
}

std::string to_string(const GroupRingElt& e) {
  std::string s;
  for (int j = 0; j < e.modulus; ++j) {
    if (e.coeffs[j] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(e.coeffs[j]);
    if (j == 1) s += "u";
    if (j > 1) s += "u^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

bool is_constant(const GroupRingElt& e) {
  for (int j = 1; j < e.modulus; ++j)
    if (e.coeffs[j] != 0) return false;
  return true;
}

int coloring_weight(const Cocycle2& phi, const Coloring& c) {
  const int m = phi.modulus();
  long long w = 0;
  for (const Crossing& x : c.crossings) w += x.sign * phi.at(x.source, x.target);
  w %= m;
  return static_cast<int>(w < 0 ? w + m : w);
}

namespace {

std::uint64_t assignment_count(const Quandle& q, const BraidKnot& k) {
  std::uint64_t total = 1;
  for (int s = 0; s < k.strands(); ++s) {
    total *= static_cast<std::uint64_t>(q.order());
    if (total > max_assignments) throw Error("coloring enumeration of " + k.name() + " exceeds the assignment cap");
  }
  return total;
}

void decode(std::uint64_t index, int n, std::vector<int>& top) {
  for (std::size_t s = 0; s < top.size(); ++s) {
    top[s] = static_cast<int>(index % n);
    index /= n;
  }
}

// Flattened braid for the hot loops.
struct Steps {
  std::vector<int> pos;
  std::vector<int> sign;
  explicit Steps(const BraidKnot& k) {
    for (int g : k.word()) {
      pos.push_back(std::abs(g) - 1);
      sign.push_back(g > 0 ? 1 : -1);
    }
  }
};

// Propagates in place; returns the weight sum (unreduced) when phi is given.
inline long long run(const Quandle& q, const Steps& steps, const Cocycle2* phi, std::vector<int>& v) {
  long long w = 0;
  for (std::size_t t = 0; t < steps.pos.size(); ++t) {
    int i = steps.pos[t];
    int a = v[i], b = v[i + 1];
    if (steps.sign[t] > 0) {
      if (phi) w += phi->at(a, b);
      v[i] = b;
      v[i + 1] = q.op(a, b);
    } else {
      int x = q.left_of(a, b);
      if (phi) w -= phi->at(x, a);
      v[i] = x;
      v[i + 1] = a;
    }
  }
  return w;
}

// Tangle colorings leave position 0 open; knot colorings close every position.
bool closes(const std::vector<int>& top, const std::vector<int>& bottom, bool tangle) {
  for (std::size_t j = tangle ? 1 : 0; j < top.size(); ++j)
    if (top[j] != bottom[j]) return false;
  return true;
}

std::vector<Coloring> collect(const Quandle& q, const BraidKnot& k, bool tangle) {
  const std::uint64_t total = assignment_count(q, k);
  std::vector<Coloring> result;
  std::vector<int> top(k.strands());
  Steps steps(k);
  for (std::uint64_t t = 0; t < total; ++t) {
    decode(t, q.order(), top);
    std::vector<int> v = top;
    run(q, steps, nullptr, v);
    if (closes(top, v, tangle)) result.push_back(propagate(q, k, top));
  }
  return result;
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const Quandle& q, const BraidKnot& k) { return collect(q, k, false); }

std::vector<Coloring> tangle_colorings(const Quandle& q, const Tangle& t) { return collect(q, t.knot, true); }

std::uint64_t count_colorings_serial(const Quandle& q, const BraidKnot& k) {
  const std::uint64_t total = assignment_count(q, k);
  Steps steps(k);
  std::vector<int> top(k.strands()), v(k.strands());
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < total; ++t) {
    decode(t, q.order(), top);
    v = top;
    run(q, steps, nullptr, v);
    if (v == top) ++count;
  }
  return count;
}

std::uint64_t count_colorings(const Quandle& q, const BraidKnot& k) {
  const std::uint64_t total = assignment_count(q, k);
  const Steps steps(k);
  const int s = k.strands();
  std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count)
  {
    std::vector<int> top(s), v(s);
#pragma omp for schedule(static)
    for (long long t = 0; t < static_cast<long long>(total); ++t) {
      decode(static_cast<std::uint64_t>(t), q.order(), top);
      v = top;
      run(q, steps, nullptr, v);
      if (v == top) ++count;
    }
  }
  return count;
}

GroupRingElt state_sum_serial(const Quandle& q, const Cocycle2& phi, const BraidKnot& k) {
  if (phi.order() != q.order()) throw ShapeMismatch("cocycle order does not match quandle");
  const int m = phi.modulus();
  const std::uint64_t total = assignment_count(q, k);
  Steps steps(k);
  GroupRingElt result = GroupRingElt::zero(m);
  std::vector<int> top(k.strands()), v(k.strands());
  for (std::uint64_t t = 0; t < total; ++t) {
    decode(t, q.order(), top);
    v = top;
    long long w = run(q, steps, &phi, v);
    if (v != top) continue;
    w %= m;
    ++result.coeffs[w < 0 ? w + m : w];
  }
  return result;
}

GroupRingElt state_sum(const Quandle& q, const Cocycle2& phi, const BraidKnot& k) {
  if (phi.order() != q.order()) throw ShapeMismatch("cocycle order does not match quandle");
  const int m = phi.modulus();
  const std::uint64_t total = assignment_count(q, k);
  const Steps steps(k);
  const int s = k.strands();
  GroupRingElt result = GroupRingElt::zero(m);
#pragma omp parallel
  {
    GroupRingElt local = GroupRingElt::zero(m);
    std::vector<int> top(s), v(s);
#pragma omp for schedule(static) nowait
    for (long long t = 0; t < static_cast<long long>(total); ++t) {
      decode(static_cast<std::uint64_t>(t), q.order(), top);
      v = top;
      long long w = run(q, steps, &phi, v);
      if (v != top) continue;
      w %= m;
      ++local.coeffs[w < 0 ? w + m : w];
    }
#pragma omp critical(forge_state_sum_merge)
    result += local;
  }
  return result;
}

bool end_monochromatic(const Quandle& q, const Tangle& t) {
  for (const Coloring& c : tangle_colorings(q, t))
    if (c.top[0] != c.bottom[0]) return false;
  return true;
}

bool end_monochromatic(const QuandleMap& f, const Tangle& t) {
  for (const Coloring& c : tangle_colorings(f.source, t))
    if (f.images[c.top[0]] == f.images[c.bottom[0]] && c.top[0] != c.bottom[0]) return false;
  return true;
}

bool check_translation_equality(const Quandle& q, const Tangle& t) {
  for (const Coloring& c : tangle_colorings(q, t))
    if (right_translation(q, c.top[0]) != right_translation(q, c.bottom[0])) return false;
  return true;
}

Coloring lift_coloring(const QuandleMap& f, const Tangle& t, const Coloring& c, int y) {
  if (!is_covering(f)) throw NotACovering("map is not a covering");
  const BraidKnot& k = t.knot;
  if (y < 0 || y >= f.source.order() || f.images[y] != c.top[0])
    throw FiberMismatch("lift start does not lie over the top color");
  const auto fibers = f.fibers();
  const int s = k.strands();
  std::vector<int> top(s, -1);
  top[0] = y;
  std::vector<Coloring> found;

  // Odometer over fiber choices at positions 1..s-1.
  std::vector<std::size_t> choice(s, 0);
  while (true) {
    for (int j = 1; j < s; ++j) top[j] = fibers[c.top[j]][choice[j]];
    Coloring lifted = propagate(f.source, k, top);
    if (closes(lifted.top, lifted.bottom, true)) found.push_back(std::move(lifted));
    int j = 1;
    while (j < s && ++choice[j] == fibers[c.top[j]].size()) choice[j++] = 0;
    if (j >= s) break;
  }
  if (found.size() != 1) throw Error("tangle coloring has " + std::to_string(found.size()) + " lifts, expected exactly one");
  const Coloring& lift = found.front();
  for (int j = 0; j < s; ++j)
    if (f.images[lift.bottom[j]] != c.bottom[j]) throw Error("lift does not project to the coloring");
  return lift;
}

std::vector<BraidKnot> bundled_knots() {
  struct Entry {
    const char* name;
    int strands;
    std::vector<int> word;
  };
  // Checked against knot determinants by dihedral coloring counts in the tests.
  const std::vector<Entry> table = {
      {"0_1", 1, {}},
      {"0_1.b", 2, {1}},
      {"3_1", 2, {1, 1, 1}},
      {"3_1.b", 3, {1, 1, 1, 2}},
      {"3_1.c", 3, {1, 1, 1, -2}},
      {"4_1", 3, {1, -2, 1, -2}},
      {"4_1.b", 4, {1, -2, 1, -2, -3}},
      {"5_1", 2, {1, 1, 1, 1, 1}},
      {"5_2", 3, {1, 1, 1, 2, -1, 2}},
      {"6_1", 4, {1, 1, 2, -1, -3, 2, -3}},
      {"6_2", 3, {1, 1, 1, -2, 1, -2}},
      {"6_3", 3, {1, 1, -2, 1, -2, -2}},
      {"7_1", 2, {1, 1, 1, 1, 1, 1, 1}},
      {"7_2", 4, {1, 1, 1, 2, -1, 2, 3, -2, 3}},
      {"7_3", 3, {1, 1, 1, 1, 1, 2, -1, 2}},
      {"7_4", 4, {1, 1, 2, -1, 2, 2, 3, -2, 3}},
      {"7_5", 3, {1, 1, 1, 1, 2, -1, 2, 2}},
      {"7_6", 4, {1, 1, -2, 1, 3, -2, 3}},
      {"7_7", 4, {1, -2, 1, -2, 3, -2, 3}},
      {"8_2", 3, {1, 1, 1, 1, 1, -2, 1, -2}},
      {"8_5", 3, {1, 1, 1, -2, 1, 1, 1, -2}},
      {"8_7", 3, {1, 1, 1, 1, -2, 1, -2, -2}},
      {"8_10", 3, {1, 1, 1, -2, 1, 1, -2, -2}},
      {"8_16", 3, {1, 1, -2, 1, 1, -2, 1, -2}},
      {"8_17", 3, {1, 1, -2, 1, -2, 1, -2, -2}},
      {"8_18", 3, {1, -2, 1, -2, 1, -2, 1, -2}},
      {"8_19", 3, {1, 1, 1, 2, 1, 1, 1, 2}},
      {"8_20", 3, {1, 1, 1, -2, -1, -1, -1, -2}},
      {"8_21", 3, {1, 1, 1, 2, -1, -1, 2, 2}},
  };
  std::vector<BraidKnot> knots;
  for (const auto& e : table) knots.push_back(parse_braid(e.name, e.strands, e.word));
  return knots;
}

}  // namespace forge
