#include "forge/smith.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

#include "forge/errors.hpp"

namespace forge {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

// g = s a + t b with g = gcd(a, b) >= 0.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& s, std::int64_t& t) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t s, t;
  if (ext_gcd(mod(a, m), m, s, t) != 1) throw Error("not invertible");
  return mod(s, m);
}

// Records every operation applied to A on the tracked transforms.
class Reducer {
 public:
  Reducer(ModMatrix& a, SmithForm& out, const SmithOptions& opt) : a_(a), out_(out), opt_(opt), m_(a.modulus()) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    swap_rows_in(a_, i, j);
    if (opt_.left) swap_rows_in(out_.left, i, j);
    if (opt_.left_inv) swap_cols_in(out_.left_inv, i, j);
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    swap_cols_in(a_, i, j);
    if (opt_.right) swap_cols_in(out_.right, i, j);
    if (opt_.right_inv) swap_rows_in(out_.right_inv, i, j);
  }

  void scale_row(int i, std::int64_t u) {
    std::int64_t ui = inverse_mod(u, m_);
    row_combo(a_, i, i, u, 0, 0, 1, false);
    if (opt_.left) row_combo(out_.left, i, i, u, 0, 0, 1, false);
    if (opt_.left_inv) col_combo(out_.left_inv, i, i, ui, 0, 0, 1, false);
  }

  // row_i += k row_j
  void add_row(int i, int j, std::int64_t k) {
    k = mod(k, m_);
    if (k == 0) return;
    axpy_row(a_, i, j, k);
    if (opt_.left) axpy_row(out_.left, i, j, k);
    if (opt_.left_inv) axpy_col(out_.left_inv, j, i, m_ - k);
  }

  // col_i += k col_j
  void add_col(int i, int j, std::int64_t k) {
    k = mod(k, m_);
    if (k == 0) return;
    axpy_col(a_, i, j, k);
    if (opt_.right) axpy_col(out_.right, i, j, k);
    if (opt_.right_inv) axpy_row(out_.right_inv, j, i, m_ - k);
  }

  // Clears column t below a pivot d that divides every entry there.
  void clear_below(int t, std::int64_t d) {
    const int rows = a_.rows();
    if (opt_.left || opt_.left_inv) {
      for (int r = t + 1; r < rows; ++r)
        if (a_(r, t) != 0) add_row(r, t, -(a_(r, t) / d));
      return;
    }
#pragma omp parallel for schedule(static) if (rows > 512)
    for (int r = t + 1; r < rows; ++r) {
      std::int64_t v = a_(r, t);
      if (v != 0) axpy_row(a_, r, t, mod(-(v / d), m_));
    }
  }

  // (row_t, row_i) <- (a row_t + b row_i, c row_t + d row_i), ad - bc = 1.
  void rows_2x2(int t, int i, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    row_combo(a_, t, i, a, b, c, d, true);
    if (opt_.left) row_combo(out_.left, t, i, a, b, c, d, true);
    if (opt_.left_inv) col_combo(out_.left_inv, t, i, d, -c, -b, a, true);
  }

  // (col_t, col_j) <- (a col_t + b col_j, c col_t + d col_j), ad - bc = 1.
  void cols_2x2(int t, int j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    col_combo(a_, t, j, a, b, c, d, true);
    if (opt_.right) col_combo(out_.right, t, j, a, b, c, d, true);
    if (opt_.right_inv) row_combo(out_.right_inv, t, j, d, -c, -b, a, true);
  }

 private:
  void swap_rows_in(ModMatrix& x, int i, int j) {
    for (int c = 0; c < x.cols(); ++c) std::swap(x.row(i)[c], x.row(j)[c]);
  }
  void swap_cols_in(ModMatrix& x, int i, int j) {
    for (int r = 0; r < x.rows(); ++r) std::swap(x.row(r)[i], x.row(r)[j]);
  }
  void axpy_row(ModMatrix& x, int i, int j, std::int64_t k) {
    std::int64_t* ri = x.row(i);
    const std::int64_t* rj = x.row(j);
    for (int c = 0; c < x.cols(); ++c)
      if (rj[c] != 0) ri[c] = (ri[c] + k * rj[c]) % m_;
  }
  void axpy_col(ModMatrix& x, int i, int j, std::int64_t k) {
    for (int r = 0; r < x.rows(); ++r) {
      std::int64_t* row = x.row(r);
      if (row[j] != 0) row[i] = (row[i] + k * row[j]) % m_;
    }
  }
  void row_combo(ModMatrix& x, int t, int i, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                 bool pair) {
    a = mod(a, m_), b = mod(b, m_), c = mod(c, m_), d = mod(d, m_);
    std::int64_t* rt = x.row(t);
    std::int64_t* ri = x.row(i);
    for (int col = 0; col < x.cols(); ++col) {
      std::int64_t vt = rt[col], vi = ri[col];
      if (!pair) {
        rt[col] = (a * vt) % m_;
        continue;
      }
      rt[col] = (a * vt + b * vi) % m_;
      ri[col] = (c * vt + d * vi) % m_;
    }
  }
  void col_combo(ModMatrix& x, int t, int j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                 bool pair) {
    a = mod(a, m_), b = mod(b, m_), c = mod(c, m_), d = mod(d, m_);
    for (int r = 0; r < x.rows(); ++r) {
      std::int64_t* row = x.row(r);
      std::int64_t vt = row[t], vj = row[j];
      if (!pair) {
        row[t] = (a * vt) % m_;
        continue;
      }
      row[t] = (a * vt + b * vj) % m_;
      row[j] = (c * vt + d * vj) % m_;
    }
  }

  ModMatrix& a_;
  SmithForm& out_;
  const SmithOptions& opt_;
  std::int64_t m_;
};

}  // namespace

ModMatrix::ModMatrix(int rows, int cols, int modulus)
    : rows_(rows), cols_(cols), m_(modulus), a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (modulus < 1) throw Error("modulus must be positive");
}

ModMatrix ModMatrix::identity(int size, int modulus) {
  ModMatrix id(size, size, modulus);
  for (int i = 0; i < size; ++i) id.set(i, i, 1);
  return id;
}

void ModMatrix::set(int r, int c, std::int64_t v) { a_[static_cast<std::size_t>(r) * cols_ + c] = mod(v, m_); }

void ModMatrix::add(int r, int c, std::int64_t v) {
  auto& x = a_[static_cast<std::size_t>(r) * cols_ + c];
  x = mod(x + v, m_);
}

std::vector<std::int64_t> ModMatrix::column(int c) const {
  std::vector<std::int64_t> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<std::int64_t> ModMatrix::apply(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    std::int64_t s = 0;
    for (int c = 0; c < cols_; ++c) s = (s + (*this)(r, c) * mod(v[c], m_)) % m_;
    out[r] = s;
  }
  return out;
}

std::int64_t associate_unit(std::int64_t a, std::int64_t m) {
  a = mod(a, m);
  if (m == 1) return 0;
  std::int64_t d = std::gcd(a, m);
  if (a == 0) return 1;
  std::int64_t reduced_m = m / d;
  std::int64_t u = reduced_m == 1 ? 1 : inverse_mod(a / d, reduced_m);
  while (std::gcd(u, m) != 1) u += reduced_m;
  return mod(u, m);
}

SmithForm smith_normal_form(ModMatrix a, const SmithOptions& opt) {
  const int rows = a.rows(), cols = a.cols();
  const std::int64_t m = a.modulus();
  SmithForm out;
  if (opt.left) out.left = ModMatrix::identity(rows, static_cast<int>(m));
  if (opt.left_inv) out.left_inv = ModMatrix::identity(rows, static_cast<int>(m));
  if (opt.right) out.right = ModMatrix::identity(cols, static_cast<int>(m));
  if (opt.right_inv) out.right_inv = ModMatrix::identity(cols, static_cast<int>(m));
  Reducer red(a, out, opt);

  const int diag = std::min(rows, cols);
  out.diagonal.assign(diag, static_cast<int>(m));

  for (int t = 0; t < diag; ++t) {
    // Pivot: smallest gcd with m in the trailing block.
    int pr = -1, pc = -1;
    std::int64_t best = m;
    for (int r = t; r < rows && best > 1; ++r) {
      const std::int64_t* row = a.row(r);
      for (int c = t; c < cols; ++c) {
        if (row[c] == 0) continue;
        std::int64_t g = std::gcd(row[c], m);
        if (g < best) {
          best = g;
          pr = r;
          pc = c;
          if (g == 1) break;
        }
      }
    }
    if (pr < 0) break;  // trailing block is zero
    red.swap_rows(t, pr);
    red.swap_cols(t, pc);

    while (true) {
      red.scale_row(t, associate_unit(a(t, t), m));
      std::int64_t d = a(t, t);

      // Column t: a gcd step whenever the pivot does not divide an entry.
      bool changed = false;
      for (int r = t + 1; r < rows; ++r) {
        std::int64_t b = a(r, t);
        if (b % d == 0) continue;
        std::int64_t s, q;
        std::int64_t g = ext_gcd(d, b, s, q);
        red.rows_2x2(t, r, s, q, -b / g, d / g);
        changed = true;
        break;
      }
      if (changed) continue;
      for (int c = t + 1; c < cols; ++c) {
        std::int64_t b = a(t, c);
        if (b % d == 0) continue;
        std::int64_t s, q;
        std::int64_t g = ext_gcd(d, b, s, q);
        red.cols_2x2(t, c, s, q, -b / g, d / g);
        changed = true;
        break;
      }
      if (changed) continue;

      // Pivot divides its row and column: clear them.
      red.clear_below(t, d);
      for (int c = t + 1; c < cols; ++c)
        if (a(t, c) != 0) red.add_col(c, t, -(a(t, c) / d));

      // Divisibility chain: pull in a row holding a non-multiple of d.
      int bad_row = -1;
      for (int r = t + 1; r < rows && bad_row < 0; ++r) {
        const std::int64_t* row = a.row(r);
        for (int c = t + 1; c < cols; ++c)
          if (row[c] % d != 0) {
            bad_row = r;
            break;
          }
      }
      if (bad_row < 0) break;
      red.add_row(t, bad_row, 1);
    }
    out.diagonal[t] = static_cast<int>(a(t, t) == 0 ? m : a(t, t));
  }
  return out;
}

}  // namespace forge
