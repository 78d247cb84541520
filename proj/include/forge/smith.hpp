#pragma once

// Smith normal form over Z/mZ.
//
// Every step is an integer-unimodular row or column operation reduced mod m, so
// the result agrees with the integer Smith form of (A | m I) while entries stay
// below m. Diagonal entries are normalized to divisors of m (m itself standing
// for a zero entry) and form a divisibility chain.

#include <cstdint>
#include <vector>

namespace forge {

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int rows, int cols, int modulus);
  static ModMatrix identity(int size, int modulus);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return m_; }

  std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, std::int64_t v);  // reduces v mod m
  void add(int r, int c, std::int64_t v);

  std::vector<std::int64_t> column(int c) const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;  // A v mod m

  // Raw row access for kernels.
  std::int64_t* row(int r) { return a_.data() + static_cast<std::size_t>(r) * cols_; }
  const std::int64_t* row(int r) const { return a_.data() + static_cast<std::size_t>(r) * cols_; }

 private:
  int rows_ = 0, cols_ = 0, m_ = 1;
  std::vector<std::int64_t> a_;
};

struct SmithOptions {
  bool left = false;       // track U
  bool left_inv = false;   // track U^-1
  bool right = false;      // track V
  bool right_inv = false;  // track V^-1
};

// U A V = S with U, V invertible mod m.
struct SmithForm {
  std::vector<int> diagonal;  // length min(rows, cols), divisors of m
  ModMatrix left, left_inv, right, right_inv;
};

SmithForm smith_normal_form(ModMatrix a, const SmithOptions& options = {});

// Inverse of a unit mod m, or the unit u with u * a = gcd(a, m) mod m.
std::int64_t associate_unit(std::int64_t a, std::int64_t m);

}  // namespace forge
