#ifndef ALGCHAIN_LINALG_HPP
#define ALGCHAIN_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "algchain/fields.hpp"

namespace algchain {

template <FieldType F>
using Vec = std::vector<typename F::Elem>;

template <FieldType F>
using Mat = std::vector<Vec<F>>;

template <FieldType F>
Vec<F> zero_vec(const F& f, int n) {
  return Vec<F>(n, f.zero());
}

template <FieldType F>
Vec<F> unit_vec(const F& f, int n, int i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <FieldType F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <FieldType F>
bool vec_eq(const F& f, const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

template <FieldType F>
void axpy(const F& f, Vec<F>& y, const typename F::Elem& c, const Vec<F>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
}

template <FieldType F>
Vec<F> scaled(const F& f, const typename F::Elem& c, const Vec<F>& x) {
  Vec<F> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.mul(c, x[i]);
  return r;
}

template <FieldType F>
Vec<F> vec_add(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

template <FieldType F>
Vec<F> vec_sub(const F& f, const Vec<F>& a, const Vec<F>& b) {
  Vec<F> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

/// A subspace of k^ambient held in reduced row-echelon form. The
/// representation is canonical: two subspaces over the same field are equal
/// as sets iff their representations compare equal.
template <FieldType F>
struct Subspace {
  int ambient = 0;
  Mat<F> rows;
  std::vector<int> pivots;

  int dim() const { return int(rows.size()); }
  bool is_zero() const { return rows.empty(); }
  bool is_full() const { return dim() == ambient; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient || a.pivots != b.pivots) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
      for (std::size_t j = 0; j < a.rows[i].size(); ++j)
        if (!(a.rows[i][j] == b.rows[i][j])) return false;
    return true;
  }
};

/// Gaussian elimination to reduced row-echelon form. Deterministic: pivots are
/// chosen left to right, first nonzero row wins.
template <FieldType F>
Subspace<F> rref(const F& f, Mat<F> rows, int ambient) {
  for (const auto& r : rows) {
    if (int(r.size()) != ambient) {
      if (r.empty()) fail(Errc::EmptyAmbient, "zero-length vector");
      fail(Errc::DimensionMismatch, "row length does not match ambient dimension");
    }
  }
  if (ambient == 0 && !rows.empty()) fail(Errc::EmptyAmbient, "zero-length vectors");
  Subspace<F> out;
  out.ambient = ambient;
  std::size_t next = 0;
  for (int col = 0; col < ambient && next < rows.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r)
      if (!f.is_zero(rows[r][col])) {
        sel = r;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    auto invp = f.inv(rows[next][col]);
    for (auto& x : rows[next]) x = f.mul(invp, x);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || f.is_zero(rows[r][col])) continue;
      auto c = f.neg(rows[r][col]);
      axpy(f, rows[r], c, rows[next]);
    }
    out.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  out.rows = std::move(rows);
  return out;
}

template <FieldType F>
Subspace<F> rref(const F& f, const Mat<F>& rows) {
  if (rows.empty()) fail(Errc::EmptyAmbient, "cannot infer ambient dimension from empty input");
  return rref(f, rows, int(rows[0].size()));
}

template <FieldType F>
Subspace<F> zero_subspace(int ambient) {
  Subspace<F> s;
  s.ambient = ambient;
  return s;
}

template <FieldType F>
Subspace<F> full_subspace(const F& f, int ambient) {
  Subspace<F> s;
  s.ambient = ambient;
  for (int i = 0; i < ambient; ++i) {
    s.rows.push_back(unit_vec(f, ambient, i));
    s.pivots.push_back(i);
  }
  return s;
}

/// Residue of v after reduction by the echelon rows of S.
template <FieldType F>
Vec<F> reduce_mod(const F& f, const Subspace<F>& S, Vec<F> v) {
  for (std::size_t r = 0; r < S.rows.size(); ++r) {
    const auto& c = v[S.pivots[r]];
    if (!f.is_zero(c)) {
      auto nc = f.neg(c);
      axpy(f, v, nc, S.rows[r]);
    }
  }
  return v;
}

template <FieldType F>
bool member(const F& f, const Subspace<F>& S, const Vec<F>& v) {
  if (int(v.size()) != S.ambient) fail(Errc::AmbientMismatch, "vector/ambient mismatch");
  return is_zero_vec(f, reduce_mod(f, S, v));
}

/// Coordinates of v in the echelon basis, when v lies in the span.
template <FieldType F>
std::optional<Vec<F>> coords_in(const F& f, const Subspace<F>& S, const Vec<F>& v) {
  Vec<F> coords(S.rows.size(), f.zero());
  Vec<F> w = v;
  for (std::size_t r = 0; r < S.rows.size(); ++r) {
    const auto c = w[S.pivots[r]];
    if (!f.is_zero(c)) {
      coords[r] = c;
      auto nc = f.neg(c);
      axpy(f, w, nc, S.rows[r]);
    }
  }
  if (!is_zero_vec(f, w)) return std::nullopt;
  return coords;
}

template <FieldType F>
bool contains(const F& f, const Subspace<F>& big, const Subspace<F>& small) {
  if (big.ambient != small.ambient) fail(Errc::AmbientMismatch, "ambient mismatch");
  if (small.dim() > big.dim()) return false;
  for (const auto& row : small.rows)
    if (!member(f, big, row)) return false;
  return true;
}

template <FieldType F>
Subspace<F> subspace_sum(const F& f, const Subspace<F>& U, const Subspace<F>& V) {
  if (U.ambient != V.ambient) fail(Errc::AmbientMismatch, "ambient mismatch");
  Mat<F> rows = U.rows;
  rows.insert(rows.end(), V.rows.begin(), V.rows.end());
  return rref(f, std::move(rows), U.ambient);
}

/// Zassenhaus intersection.
template <FieldType F>
Subspace<F> subspace_intersect(const F& f, const Subspace<F>& U, const Subspace<F>& V) {
  if (U.ambient != V.ambient) fail(Errc::AmbientMismatch, "ambient mismatch");
  const int n = U.ambient;
  Mat<F> block;
  for (const auto& u : U.rows) {
    Vec<F> row(2 * n, f.zero());
    for (int i = 0; i < n; ++i) row[i] = row[n + i] = u[i];
    block.push_back(std::move(row));
  }
  for (const auto& v : V.rows) {
    Vec<F> row(2 * n, f.zero());
    for (int i = 0; i < n; ++i) row[i] = v[i];
    block.push_back(std::move(row));
  }
  if (block.empty()) return zero_subspace<F>(n);
  auto ech = rref(f, std::move(block), 2 * n);
  Mat<F> inter;
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    if (ech.pivots[r] >= n) {
      Vec<F> tail(ech.rows[r].begin() + n, ech.rows[r].end());
      inter.push_back(std::move(tail));
    }
  }
  return rref(f, std::move(inter), n);
}

/// Lexicographically-first standard basis vectors extending U's pivots to a
/// basis of the ambient space.
template <FieldType F>
Mat<F> complement_basis(const F& f, const Subspace<F>& U) {
  Mat<F> out;
  std::size_t pi = 0;
  for (int col = 0; col < U.ambient; ++col) {
    if (pi < U.pivots.size() && U.pivots[pi] == col) {
      ++pi;
      continue;
    }
    out.push_back(unit_vec(f, U.ambient, col));
  }
  return out;
}

/// Indices of the non-pivot columns (the coordinates used as coset
/// representatives by quotient constructions).
template <FieldType F>
std::vector<int> complement_columns(const Subspace<F>& U) {
  std::vector<int> cols;
  std::size_t pi = 0;
  for (int col = 0; col < U.ambient; ++col) {
    if (pi < U.pivots.size() && U.pivots[pi] == col) {
      ++pi;
      continue;
    }
    cols.push_back(col);
  }
  return cols;
}

/// Null space {v : M v = 0} for M given as a list of rows.
template <FieldType F>
Subspace<F> kernel(const F& f, const Mat<F>& M, int ncols) {
  for (const auto& r : M)
    if (int(r.size()) != ncols) fail(Errc::DimensionMismatch, "ragged matrix");
  auto ech = rref(f, M, ncols);
  Mat<F> basis;
  std::vector<bool> is_pivot(ncols, false);
  for (int pcol : ech.pivots) is_pivot[pcol] = true;
  for (int col = 0; col < ncols; ++col) {
    if (is_pivot[col]) continue;
    Vec<F> v(ncols, f.zero());
    v[col] = f.one();
    for (std::size_t r = 0; r < ech.rows.size(); ++r)
      v[ech.pivots[r]] = f.neg(ech.rows[r][col]);
    basis.push_back(std::move(v));
  }
  return rref(f, std::move(basis), ncols);
}

/// Left kernel {x : x M = 0}, x indexed by the rows of M.
template <FieldType F>
Subspace<F> left_kernel(const F& f, const Mat<F>& M, int ncols) {
  // transpose and reuse kernel
  Mat<F> T(ncols, Vec<F>(M.size(), f.zero()));
  for (std::size_t r = 0; r < M.size(); ++r)
    for (int c = 0; c < ncols; ++c) T[c][r] = M[r][c];
  return kernel(f, T, int(M.size()));
}

/// One solution of M x = b, or nullopt when inconsistent.
template <FieldType F>
std::optional<Vec<F>> solve(const F& f, const Mat<F>& M, const Vec<F>& b, int ncols) {
  if (M.size() != b.size()) fail(Errc::DimensionMismatch, "rhs length mismatch");
  Mat<F> aug;
  for (std::size_t r = 0; r < M.size(); ++r) {
    Vec<F> row = M[r];
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  if (aug.empty()) return Vec<F>(ncols, f.zero());
  auto ech = rref(f, std::move(aug), ncols + 1);
  Vec<F> x(ncols, f.zero());
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    if (ech.pivots[r] == ncols) return std::nullopt;  // row (0..0|1): inconsistent
    x[ech.pivots[r]] = ech.rows[r][ncols];
  }
  return x;
}

/// Solution of x M = b in row convention: x indexed by rows of M.
template <FieldType F>
std::optional<Vec<F>> solve_left(const F& f, const Mat<F>& M, const Vec<F>& b, int ncols) {
  Mat<F> T(ncols, Vec<F>(M.size(), f.zero()));
  for (std::size_t r = 0; r < M.size(); ++r)
    for (int c = 0; c < ncols; ++c) T[c][r] = M[r][c];
  return solve(f, T, b, int(M.size()));
}

template <FieldType F>
Mat<F> mat_mul(const F& f, const Mat<F>& A, const Mat<F>& B) {
  if (A.empty() || B.empty()) return {};
  const std::size_t n = A.size(), k = B.size(), m = B[0].size();
  Mat<F> C(n, Vec<F>(m, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (f.is_zero(A[i][t])) continue;
      for (std::size_t j = 0; j < m; ++j)
        C[i][j] = f.add(C[i][j], f.mul(A[i][t], B[t][j]));
    }
  return C;
}

template <FieldType F>
Mat<F> identity_mat(const F& f, int n) {
  Mat<F> I(n, Vec<F>(n, f.zero()));
  for (int i = 0; i < n; ++i) I[i][i] = f.one();
  return I;
}

/// Inverse of a square matrix, or nullopt when singular.
template <FieldType F>
std::optional<Mat<F>> mat_inverse(const F& f, const Mat<F>& A) {
  const int n = int(A.size());
  Mat<F> aug(n, Vec<F>(2 * n, f.zero()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = A[i][j];
    aug[i][n + i] = f.one();
  }
  auto ech = rref(f, std::move(aug), 2 * n);
  if (ech.dim() != n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (ech.pivots[i] != i) return std::nullopt;
  Mat<F> inv(n, Vec<F>(n, f.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = ech.rows[i][n + j];
  return inv;
}

template <FieldType F>
std::string vec_str(const F& f, const Vec<F>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += f.str(v[i]);
  }
  return s;
}

}  // namespace algchain

#endif
