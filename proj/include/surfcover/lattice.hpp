#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace surfcover {
namespace lin {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow in lattice arithmetic") {}
};

inline i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}
inline i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}
inline i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

// floor division
inline i64 fdiv(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Mat zeros(size_t rows, size_t cols) { return Mat(rows, Vec(cols, 0)); }

inline Mat identity(size_t n) {
  Mat m = zeros(n, n);
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline size_t row_count(const Mat& m) { return m.size(); }
inline size_t col_count(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

inline Mat matmul(const Mat& a, const Mat& b) {
  size_t n = row_count(a), k = col_count(a), p = col_count(b);
  if (k != row_count(b)) throw std::invalid_argument("matmul shape mismatch");
  Mat c = zeros(n, p);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < p; ++j) {
      i64 s = 0;
      for (size_t t = 0; t < k; ++t) s = add(s, mul(a[i][t], b[t][j]));
      c[i][j] = s;
    }
  return c;
}

inline Vec matvec(const Mat& a, const Vec& x) {
  size_t n = row_count(a), k = col_count(a);
  if (k != x.size()) throw std::invalid_argument("matvec shape mismatch");
  Vec y(n, 0);
  for (size_t i = 0; i < n; ++i) {
    i64 s = 0;
    for (size_t t = 0; t < k; ++t) s = add(s, mul(a[i][t], x[t]));
    y[i] = s;
  }
  return y;
}

inline Mat transpose(const Mat& a) {
  Mat t = zeros(col_count(a), row_count(a));
  for (size_t i = 0; i < row_count(a); ++i)
    for (size_t j = 0; j < col_count(a); ++j) t[j][i] = a[i][j];
  return t;
}

namespace detail {
inline void col_axpy(Mat& m, size_t dst, size_t src, i64 q) {
  // column dst -= q * column src
  for (size_t i = 0; i < m.size(); ++i) m[i][dst] = sub(m[i][dst], mul(q, m[i][src]));
}
inline void col_swap(Mat& m, size_t a, size_t b) {
  for (size_t i = 0; i < m.size(); ++i) std::swap(m[i][a], m[i][b]);
}
inline void col_negate(Mat& m, size_t c) {
  for (size_t i = 0; i < m.size(); ++i) m[i][c] = sub(0, m[i][c]);
}
}  // namespace detail

struct Hnf {
  Mat basis;                // m x rank, column basis of the lattice
  std::vector<size_t> pivot_rows;  // ascending, one per column
};

// Column-style Hermite normal form of the lattice spanned by the columns
// of a: lower-triangular on the pivot structure, positive pivots, entries
// below each pivot's row reduced modulo that row's pivot.
inline Hnf hnf(const Mat& input) {
  Mat m = input;
  size_t rows = row_count(m), cols = col_count(m);
  size_t next = 0;  // next column slot to fill with a pivot
  std::vector<size_t> pivot_rows;
  for (size_t r = 0; r < rows && next < cols; ++r) {
    // Euclid over columns next..cols-1 on row r.
    while (true) {
      size_t best = cols;
      for (size_t c = next; c < cols; ++c)
        if (m[r][c] != 0 &&
            (best == cols || std::abs(m[r][c]) < std::abs(m[r][best])))
          best = c;
      if (best == cols) break;  // row r is all zero in the active block
      detail::col_swap(m, next, best);
      bool clean = true;
      for (size_t c = next + 1; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        i64 q = fdiv(m[r][c], m[r][next]);
        detail::col_axpy(m, c, next, q);
        if (m[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[r][next] == 0) continue;
    if (m[r][next] < 0) detail::col_negate(m, next);
    // reduce earlier columns at row r modulo the new pivot
    for (size_t c = 0; c < next; ++c) {
      i64 q = fdiv(m[r][c], m[r][next]);
      if (q != 0) detail::col_axpy(m, c, next, q);
    }
    pivot_rows.push_back(r);
    ++next;
  }
  Hnf h;
  h.pivot_rows = pivot_rows;
  h.basis = zeros(rows, next);
  for (size_t i = 0; i < rows; ++i)
    for (size_t c = 0; c < next; ++c) h.basis[i][c] = m[i][c];
  return h;
}

inline bool full_rank_square(const Hnf& h) {
  return !h.basis.empty() && col_count(h.basis) == row_count(h.basis);
}

// Index of the lattice in Z^rows; 0 encodes infinite (rank deficient).
inline i64 lattice_index(const Hnf& h) {
  if (!full_rank_square(h)) return 0;
  i64 d = 1;
  for (size_t c = 0; c < col_count(h.basis); ++c)
    d = mul(d, h.basis[h.pivot_rows[c]][c]);
  return d;
}

inline bool lattice_member(const Hnf& h, const Vec& v_in) {
  Vec v = v_in;
  if (v.size() != row_count(h.basis)) throw std::invalid_argument("dimension mismatch");
  for (size_t c = 0; c < col_count(h.basis); ++c) {
    size_t r = h.pivot_rows[c];
    i64 p = h.basis[r][c];
    if (v[r] % p != 0) return false;
    i64 q = v[r] / p;
    if (q != 0)
      for (size_t i = 0; i < v.size(); ++i) v[i] = sub(v[i], mul(q, h.basis[i][c]));
  }
  for (i64 x : v)
    if (x != 0) return false;
  return true;
}

inline bool lattice_equal(const Hnf& a, const Hnf& b) {
  return a.pivot_rows == b.pivot_rows && a.basis == b.basis;
}

struct Snf {
  Mat d;  // diagonal, invariant factors d[i][i] with d0 | d1 | ...
  Mat u;  // rows transform: u * a * v == d
  Mat v;
};

inline Snf snf(const Mat& input) {
  Mat a = input;
  size_t rows = row_count(a), cols = col_count(a);
  Mat u = identity(rows), v = identity(cols);
  auto row_axpy = [&](Mat& m, size_t dst, size_t src, i64 q) {
    for (size_t j = 0; j < col_count(m); ++j) m[dst][j] = sub(m[dst][j], mul(q, m[src][j]));
  };
  auto row_swap = [&](Mat& m, size_t x, size_t y) { std::swap(m[x], m[y]); };
  auto row_negate = [&](Mat& m, size_t x) {
    for (size_t j = 0; j < col_count(m); ++j) m[x][j] = sub(0, m[x][j]);
  };

  // Diagonalize the block starting at t0; returns the rank reached.
  auto diagonalize = [&](size_t t0) {
    size_t t = t0;
    while (t < rows && t < cols) {
      size_t pr = rows, pc = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || std::abs(a[i][j]) < std::abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;  // trailing block is zero
      row_swap(a, t, pr);
      row_swap(u, t, pr);
      detail::col_swap(a, t, pc);
      detail::col_swap(v, t, pc);
      // Euclid until row t and column t are clear beyond the pivot. Each
      // re-entry strictly shrinks |a[t][t]|, so this terminates.
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] == 0) continue;
          i64 q = fdiv(a[i][t], a[t][t]);
          row_axpy(a, i, t, q);
          row_axpy(u, i, t, q);
          if (a[i][t] != 0) {  // remainder became the smaller pivot
            row_swap(a, t, i);
            row_swap(u, t, i);
            dirty = true;
          }
        }
        for (size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] == 0) continue;
          i64 q = fdiv(a[t][j], a[t][t]);
          detail::col_axpy(a, j, t, q);
          detail::col_axpy(v, j, t, q);
          if (a[t][j] != 0) {
            detail::col_swap(a, t, j);
            detail::col_swap(v, t, j);
            dirty = true;
          }
        }
      }
      if (a[t][t] < 0) {
        row_negate(a, t);
        row_negate(u, t);
      }
      ++t;
    }
    return t;
  };

  size_t rank = diagonalize(0);
  // Enforce d_i | d_{i+1}: fold the offending column in and rediagonalize.
  // The running product of the leading i+1 diagonal entries strictly drops
  // (it becomes gcd*lcm-compatible), so the loop terminates.
  bool ok = false;
  while (!ok) {
    ok = true;
    for (size_t i = 0; i + 1 < rank; ++i) {
      if (a[i + 1][i + 1] % a[i][i] == 0) continue;
      for (size_t r2 = 0; r2 < rows; ++r2) a[r2][i] = add(a[r2][i], a[r2][i + 1]);
      for (size_t r2 = 0; r2 < cols; ++r2) v[r2][i] = add(v[r2][i], v[r2][i + 1]);
      rank = diagonalize(i);
      ok = false;
      break;
    }
  }
  return {a, u, v};
}

inline std::vector<i64> invariant_factors(const Snf& s) {
  std::vector<i64> f;
  size_t n = std::min(row_count(s.d), col_count(s.d));
  for (size_t i = 0; i < n; ++i)
    if (s.d[i][i] != 0) f.push_back(s.d[i][i]);
  return f;
}

// Basis of the integer kernel {x : a x = 0}, as columns.
inline Mat integer_kernel(const Mat& a) {
  Snf s = snf(a);
  size_t cols = col_count(a);
  size_t r = invariant_factors(s).size();
  Mat k = zeros(cols, cols - r);
  for (size_t j = r; j < cols; ++j)
    for (size_t i = 0; i < cols; ++i) k[i][j - r] = s.v[i][j];
  return k;
}

}  // namespace lin
}  // namespace surfcover
