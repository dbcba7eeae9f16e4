#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "scspan/int_matrix.hpp"

// Exact lattice algebra on row lattices of Z^n: Hermite and Smith normal
// forms, membership with certifying coefficients, saturation, quotient
// invariant factors, primitivity.
//
// Conventions (fixed project-wide): row-style HNF, row-echelon with positive
// pivots and entries above each pivot reduced into [0, pivot).  That form is
// canonical per lattice, so two lattices are equal iff their HNF matrices
// are identical.

namespace scspan {

inline BigInt floor_div(const BigInt& x, const BigInt& y) {
  BigInt q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

// g = gcd(x, y) = s x + t y, g >= 0
inline void xgcd(const BigInt& x, const BigInt& y, BigInt& g, BigInt& s, BigInt& t) {
  BigInt r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1; r0 = r1; r1 = tmp;
    tmp = s0 - q * s1; s0 = s1; s1 = tmp;
    tmp = t0 - q * t1; t0 = t1; t1 = tmp;
  }
  if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
  g = r0; s = s0; t = t0;
}

namespace detail {

inline void row_submul(std::vector<BigInt>& dst, const std::vector<BigInt>& src,
                       const BigInt& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

// unimodular 2x2 combine zeroing b[col]:
//   a' = s a + t b,   b' = -(b[col]/g) a + (a[col]/g) b
inline void gcd_combine(std::vector<BigInt>& a_row, std::vector<BigInt>& b_row,
                        std::size_t col) {
  BigInt g, s, t;
  xgcd(a_row[col], b_row[col], g, s, t);
  BigInt ag = a_row[col] / g, bg = b_row[col] / g;
  for (std::size_t i = 0; i < a_row.size(); ++i) {
    BigInt na = s * a_row[i] + t * b_row[i];
    BigInt nb = ag * b_row[i] - bg * a_row[i];
    a_row[i] = std::move(na);
    b_row[i] = std::move(nb);
  }
}

}  // namespace detail

struct HnfResult {
  IntMatrix H;  // same shape as input, zero rows at the bottom
  IntMatrix U;  // unimodular, U * M = H
  std::size_t rank = 0;
};

inline HnfResult hnf(const IntMatrix& m) {
  std::size_t R = m.rows, C = m.cols;
  std::vector<std::vector<BigInt>> h(R), u(R);
  for (std::size_t r = 0; r < R; ++r) {
    h[r] = m.row(r);
    u[r].assign(R, 0);
    u[r][r] = 1;
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t piv = row;
    while (piv < R && h[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(h[row], h[piv]);
    std::swap(u[row], u[piv]);
    for (std::size_t r = row + 1; r < R; ++r) {
      if (h[r][col] == 0) continue;
      BigInt g, s, t;
      xgcd(h[row][col], h[r][col], g, s, t);
      BigInt ag = h[row][col] / g, bg = h[r][col] / g;
      for (std::size_t i = 0; i < C; ++i) {
        BigInt na = s * h[row][i] + t * h[r][i];
        BigInt nb = ag * h[r][i] - bg * h[row][i];
        h[row][i] = std::move(na);
        h[r][i] = std::move(nb);
      }
      for (std::size_t i = 0; i < R; ++i) {
        BigInt na = s * u[row][i] + t * u[r][i];
        BigInt nb = ag * u[r][i] - bg * u[row][i];
        u[row][i] = std::move(na);
        u[r][i] = std::move(nb);
      }
    }
    if (h[row][col] < 0) {
      for (auto& x : h[row]) x = -x;
      for (auto& x : u[row]) x = -x;
    }
    for (std::size_t r = 0; r < row; ++r) {
      BigInt q = floor_div(h[r][col], h[row][col]);
      detail::row_submul(h[r], h[row], q);
      detail::row_submul(u[r], u[row], q);
    }
    ++row;
  }
  HnfResult res;
  res.rank = row;
  res.H = IntMatrix::from_rows(h, C);
  res.U = IntMatrix::from_rows(u, R);
  return res;
}

// Incrementally maintained canonical row HNF of a growing lattice.
// add_row reduces the new vector against current pivots (gcd-combining when
// needed) and renormalizes, so the stored matrix is always the canonical
// HNF of everything added so far.
class RowHnf {
 public:
  explicit RowHnf(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // returns true if the lattice grew / changed
  bool add_row(std::vector<BigInt> v) {
    if (v.size() != cols_) throw Error("RowHnf: row width mismatch");
    bool pivots_changed = false;
    // reduce by leading column so echelon structure survives gcd combines:
    // both the incoming row and the pivot row it meets have zeros strictly
    // before that column
    std::size_t lead = leading_col(v);
    while (lead < cols_) {
      std::size_t k = 0;
      while (k < pivot_col_.size() && pivot_col_[k] < lead) ++k;
      if (k == pivot_col_.size() || pivot_col_[k] != lead) break;
      if (v[lead] % rows_[k][lead] == 0) {
        detail::row_submul(v, rows_[k], v[lead] / rows_[k][lead]);
      } else {
        detail::gcd_combine(rows_[k], v, lead);
        pivots_changed = true;
      }
      lead = leading_col(v);
    }
    bool inserted = false;
    if (lead < cols_) {
      std::size_t pos = 0;
      while (pos < pivot_col_.size() && pivot_col_[pos] < lead) ++pos;
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
      pivot_col_.insert(pivot_col_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
      inserted = true;
    }
    if (pivots_changed || inserted) {
      renormalize();
      return true;
    }
    return false;
  }

  bool contains(const std::vector<BigInt>& v0) const {
    if (v0.size() != cols_) throw Error("RowHnf: row width mismatch");
    std::vector<BigInt> v = v0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t col = pivot_col_[k];
      if (v[col] == 0) continue;
      if (v[col] % rows_[k][col] != 0) return false;
      detail::row_submul(v, rows_[k], v[col] / rows_[k][col]);
    }
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
  }

  bool is_full_lattice() const {
    if (rows_.size() != cols_) return false;
    for (std::size_t k = 0; k < rows_.size(); ++k)
      if (rows_[k][pivot_col_[k]] != 1) return false;
    return true;
  }

  IntMatrix to_matrix() const { return IntMatrix::from_rows(rows_, cols_); }

  bool operator==(const RowHnf& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
  }

 private:
  std::size_t leading_col(const std::vector<BigInt>& v) const {
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0) return c;
    return cols_;
  }

  void renormalize() {
    // pivots positive, and all entries above each pivot reduced into [0, p)
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k][pivot_col_[k]] < 0)
        for (auto& x : rows_[k]) x = -x;
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::size_t col = pivot_col_[k];
      const BigInt& p = rows_[k][col];
      for (std::size_t r = 0; r < k; ++r) {
        BigInt q = floor_div(rows_[r][col], p);
        detail::row_submul(rows_[r], rows_[k], q);
      }
    }
  }

  std::size_t cols_;
  std::vector<std::vector<BigInt>> rows_;     // echelon order
  std::vector<std::size_t> pivot_col_;
};

struct SnfResult {
  IntMatrix D;                    // diagonal, d1 | d2 | ...
  std::vector<BigInt> factors;    // nonzero diagonal entries, positive
};

inline SnfResult snf(const IntMatrix& m) {
  IntMatrix d = m;
  std::size_t R = d.rows, C = d.cols;
  std::size_t t = 0;
  auto nonzero_in_block = [&](std::size_t& br, std::size_t& bc) {
    bool found = false;
    BigInt best;
    for (std::size_t r = t; r < R; ++r)
      for (std::size_t c = t; c < C; ++c) {
        if (d.at(r, c) == 0) continue;
        BigInt v = abs(d.at(r, c));
        if (!found || v < best) {
          found = true;
          best = v;
          br = r;
          bc = c;
        }
      }
    return found;
  };
  while (t < R && t < C) {
    std::size_t br = 0, bc = 0;
    if (!nonzero_in_block(br, bc)) break;
    // move smallest-magnitude entry to the corner
    if (br != t)
      for (std::size_t c = 0; c < C; ++c) std::swap(d.at(br, c), d.at(t, c));
    if (bc != t)
      for (std::size_t r = 0; r < R; ++r) std::swap(d.at(r, bc), d.at(r, t));
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (d.at(r, t) == 0) continue;
        if (d.at(r, t) % d.at(t, t) == 0) {
          BigInt q = d.at(r, t) / d.at(t, t);
          for (std::size_t c = 0; c < C; ++c) d.at(r, c) -= q * d.at(t, c);
        } else {
          BigInt g, s, u;
          xgcd(d.at(t, t), d.at(r, t), g, s, u);
          BigInt ag = d.at(t, t) / g, bg = d.at(r, t) / g;
          for (std::size_t c = 0; c < C; ++c) {
            BigInt na = s * d.at(t, c) + u * d.at(r, c);
            BigInt nb = ag * d.at(r, c) - bg * d.at(t, c);
            d.at(t, c) = std::move(na);
            d.at(r, c) = std::move(nb);
          }
          dirty = true;
        }
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (d.at(t, c) == 0) continue;
        if (d.at(t, c) % d.at(t, t) == 0) {
          BigInt q = d.at(t, c) / d.at(t, t);
          for (std::size_t r = 0; r < R; ++r) d.at(r, c) -= q * d.at(r, t);
        } else {
          BigInt g, s, u;
          xgcd(d.at(t, t), d.at(t, c), g, s, u);
          BigInt ag = d.at(t, t) / g, bg = d.at(t, c) / g;
          for (std::size_t r = 0; r < R; ++r) {
            BigInt na = s * d.at(r, t) + u * d.at(r, c);
            BigInt nb = ag * d.at(r, c) - bg * d.at(r, t);
            d.at(r, t) = std::move(na);
            d.at(r, c) = std::move(nb);
          }
          dirty = true;
        }
      }
      if (!dirty) {
        // corner must divide every remaining entry; if not, fold the bad row
        // in and restart the clearing loop
        bool fixed = true;
        for (std::size_t r = t + 1; r < R && fixed; ++r)
          for (std::size_t c = t + 1; c < C && fixed; ++c)
            if (d.at(r, c) % d.at(t, t) != 0) {
              for (std::size_t cc = 0; cc < C; ++cc) d.at(t, cc) += d.at(r, cc);
              fixed = false;
            }
        dirty = !fixed;
      }
    }
    if (d.at(t, t) < 0) d.at(t, t) = -d.at(t, t);
    ++t;
  }
  SnfResult res;
  res.D = IntMatrix(R, C);
  for (std::size_t i = 0; i < t; ++i) res.D.at(i, i) = d.at(i, i);
  for (std::size_t i = 0; i < t; ++i) res.factors.push_back(d.at(i, i));
  return res;
}

// v as an integer combination of m's rows; coefficients certify exactly
inline std::optional<std::vector<BigInt>> membership(const std::vector<BigInt>& v,
                                                     const IntMatrix& m) {
  HnfResult h = hnf(m);
  std::vector<BigInt> w = v;
  std::vector<BigInt> ch(m.rows, 0);
  for (std::size_t r = 0; r < h.rank; ++r) {
    std::size_t col = 0;
    while (col < h.H.cols && h.H.at(r, col) == 0) ++col;
    if (col == h.H.cols) break;
    if (w[col] == 0) continue;
    if (w[col] % h.H.at(r, col) != 0) return std::nullopt;
    BigInt q = w[col] / h.H.at(r, col);
    for (std::size_t c = 0; c < h.H.cols; ++c) w[c] -= q * h.H.at(r, c);
    ch[r] = q;
  }
  for (const auto& x : w)
    if (x != 0) return std::nullopt;
  // v = ch * H = ch * U * m
  std::vector<BigInt> coeff(m.rows, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (ch[r] == 0) continue;
    for (std::size_t c = 0; c < m.rows; ++c) coeff[c] += ch[r] * h.U.at(r, c);
  }
  return coeff;
}

// basis (as rows) of { z in Z^cols : m z^T = 0 }; rows of the result are a
// saturated sublattice since they extend to a unimodular basis
inline IntMatrix right_kernel(const IntMatrix& m) {
  IntMatrix mt = m.transpose();
  HnfResult h = hnf(mt);
  IntMatrix k(mt.rows - h.rank, mt.rows);
  for (std::size_t r = h.rank; r < mt.rows; ++r)
    for (std::size_t c = 0; c < mt.rows; ++c) k.at(r - h.rank, c) = h.U.at(r, c);
  return k;
}

// smallest sublattice of Z^n containing L that is closed under division:
// Sat(L) = (Q-span of L) cap Z^n, returned as canonical HNF rows
inline IntMatrix saturation(const IntMatrix& l) {
  IntMatrix k = right_kernel(l);
  IntMatrix sat = right_kernel(k);
  HnfResult h = hnf(sat);
  IntMatrix out(h.rank, l.cols);
  for (std::size_t r = 0; r < h.rank; ++r)
    for (std::size_t c = 0; c < l.cols; ++c) out.at(r, c) = h.H.at(r, c);
  return out;
}

struct QuotientInvariants {
  std::vector<BigInt> factors;  // nontrivial (> 1), divisibility order
  std::size_t free_rank = 0;    // n - rank(L)
};

inline QuotientInvariants quotient_invariants(const IntMatrix& l) {
  SnfResult s = snf(l);
  QuotientInvariants q;
  q.free_rank = l.cols - s.factors.size();
  for (const auto& d : s.factors)
    if (d > 1) q.factors.push_back(d);
  return q;
}

// Quotient coordinates against a saturated sublattice B (torsion-free
// quotient): pair with a basis of the orthogonal kernel lattice.  The image
// of v is primitive iff the coordinate gcd is 1.
struct QuotientData {
  IntMatrix kernel;  // right_kernel(B): rows pair with Z^n / B

  static QuotientData of(const IntMatrix& b) { return QuotientData{right_kernel(b)}; }

  std::vector<BigInt> coords(const std::vector<BigInt>& v) const {
    std::vector<BigInt> c(kernel.rows, 0);
    for (std::size_t r = 0; r < kernel.rows; ++r)
      for (std::size_t j = 0; j < kernel.cols; ++j) c[r] += v[j] * kernel.at(r, j);
    return c;
  }
};

inline bool is_primitive(const std::vector<BigInt>& v, const QuotientData& q) {
  std::vector<BigInt> c = q.coords(v);
  BigInt g = 0;
  for (const auto& x : c) g = gcd(g, x);
  return g == 1;
}

// exact determinant, Bareiss fraction-free elimination
inline BigInt det(const IntMatrix& m) {
  if (m.rows != m.cols) throw Error("det of non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && w.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(w.at(k, c), w.at(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

}  // namespace scspan
