#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "scspan/word.hpp"

// Dense integer matrices with unbounded entries.  Intermediate values in
// Hermite/Smith eliminations routinely exceed machine words, so everything
// downstream of the lattice code works in cpp_int.

namespace scspan {

using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  BigInt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows_in,
                             std::size_t ncols) {
    IntMatrix m(rows_in.size(), ncols);
    for (std::size_t r = 0; r < rows_in.size(); ++r) {
      if (rows_in[r].size() != ncols) throw Error("ragged row in from_rows");
      for (std::size_t c = 0; c < ncols; ++c) m.at(r, c) = rows_in[r][c];
    }
    return m;
  }

  std::vector<BigInt> row(std::size_t r) const {
    return std::vector<BigInt>(a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                               a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
  }

  IntMatrix transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }
};

inline IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw Error("matrix product shape mismatch");
  IntMatrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const BigInt& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

inline IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols != bottom.cols && top.rows != 0 && bottom.rows != 0)
    throw Error("vstack width mismatch");
  std::size_t cols = top.rows ? top.cols : bottom.cols;
  IntMatrix m(top.rows + bottom.rows, cols);
  std::copy(top.a.begin(), top.a.end(), m.a.begin());
  std::copy(bottom.a.begin(), bottom.a.end(),
            m.a.begin() + static_cast<std::ptrdiff_t>(top.rows * cols));
  return m;
}

// sparse triplet text: header "rows cols nnz", then one "r c value" per line;
// values printed as exact decimals
inline void write_triplets(std::ostream& os, const IntMatrix& m) {
  std::size_t nnz = 0;
  for (const auto& x : m.a)
    if (x != 0) ++nnz;
  os << m.rows << ' ' << m.cols << ' ' << nnz << '\n';
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0) os << r << ' ' << c << ' ' << m.at(r, c) << '\n';
}

inline IntMatrix read_triplets(std::istream& is) {
  std::size_t rows, cols, nnz;
  if (!(is >> rows >> cols >> nnz)) throw ParseError("bad triplet header");
  IntMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r, c;
    std::string val;
    if (!(is >> r >> c >> val)) throw ParseError("truncated triplet list");
    if (r >= rows || c >= cols) throw ParseError("triplet index out of range");
    m.at(r, c) = BigInt(val);
  }
  return m;
}

}  // namespace scspan
