#ifndef ALGCHAIN_ALGEBRA_HPP
#define ALGCHAIN_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "algchain/linalg.hpp"
#include "algchain/poly.hpp"

namespace algchain {

/// A finite-dimensional associative algebra presented by sparse structure
/// constants over an exact field. Not necessarily unital: `unital` is set only
/// when some basis element is a verified two-sided identity.
template <FieldType F>
struct AlgebraTable {
  using Elem = typename F::Elem;
  using Term = std::pair<int, Elem>;

  F field;
  int dim = 0;
  std::vector<std::vector<Term>> products;  // (i,j) at index i*dim+j, terms sorted by k
  std::optional<int> unital;
  std::string label;

  explicit AlgebraTable(F f) : field(std::move(f)) {}

  const std::vector<Term>& prod(int i, int j) const { return products[std::size_t(i) * dim + j]; }
  std::vector<Term>& prod(int i, int j) { return products[std::size_t(i) * dim + j]; }
};

template <FieldType F>
Vec<F> multiply(const AlgebraTable<F>& A, const Vec<F>& u, const Vec<F>& v) {
  const F& f = A.field;
  if (int(u.size()) != A.dim || int(v.size()) != A.dim)
    fail(Errc::DimensionMismatch, "vector length does not match algebra dimension");
  Vec<F> w(A.dim, f.zero());
  for (int i = 0; i < A.dim; ++i) {
    if (f.is_zero(u[i])) continue;
    for (int j = 0; j < A.dim; ++j) {
      if (f.is_zero(v[j])) continue;
      auto c = f.mul(u[i], v[j]);
      for (const auto& [k, s] : A.prod(i, j)) w[k] = f.add(w[k], f.mul(c, s));
    }
  }
  return w;
}

namespace detail {

template <FieldType F>
void sort_terms(std::vector<std::pair<int, typename F::Elem>>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

/// Detect a basis element acting as a two-sided identity.
template <FieldType F>
void detect_unital(AlgebraTable<F>& A) {
  const F& f = A.field;
  A.unital.reset();
  for (int i = 0; i < A.dim; ++i) {
    bool ok = true;
    auto ei = unit_vec(f, A.dim, i);
    for (int j = 0; j < A.dim && ok; ++j) {
      auto ej = unit_vec(f, A.dim, j);
      if (!vec_eq(f, multiply(A, ei, ej), ej) || !vec_eq(f, multiply(A, ej, ei), ej)) ok = false;
    }
    if (ok) {
      A.unital = i;
      return;
    }
  }
}

}  // namespace detail

/// Exhaustive scan for an associativity violation; returns a witness triple.
template <FieldType F>
std::optional<std::tuple<int, int, int>> associativity_witness(const AlgebraTable<F>& A) {
  const F& f = A.field;
  for (int i = 0; i < A.dim; ++i) {
    auto ei = unit_vec(f, A.dim, i);
    for (int j = 0; j < A.dim; ++j) {
      auto ej = unit_vec(f, A.dim, j);
      auto eij = multiply(A, ei, ej);
      for (int l = 0; l < A.dim; ++l) {
        auto el = unit_vec(f, A.dim, l);
        auto lhs = multiply(A, eij, el);
        auto rhs = multiply(A, ei, multiply(A, ej, el));
        if (!vec_eq(f, lhs, rhs)) return std::make_tuple(i, j, l);
      }
    }
  }
  return std::nullopt;
}

struct TableEntry {
  int i, j, k;
  std::string scalar;  // literal in the field's grammar
};

template <FieldType F>
AlgebraTable<F> algebra_from_table(const F& f, int dim,
                                   const std::vector<std::tuple<int, int, int, typename F::Elem>>& entries,
                                   bool check = true, std::string label = {}) {
  if (dim < 0) fail(Errc::BadInput, "negative dimension");
  AlgebraTable<F> A(f);
  A.dim = dim;
  A.label = std::move(label);
  A.products.assign(std::size_t(dim) * dim, {});
  for (const auto& [i, j, k, c] : entries) {
    if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
      fail(Errc::IndexOutOfRange, "product entry index out of range");
    if (f.is_zero(c)) continue;
    auto& terms = A.prod(i, j);
    bool merged = false;
    for (auto& t : terms)
      if (t.first == k) {
        t.second = f.add(t.second, c);
        merged = true;
        break;
      }
    if (!merged) terms.emplace_back(k, c);
  }
  for (auto& terms : A.products) {
    std::erase_if(terms, [&](const auto& t) { return f.is_zero(t.second); });
    detail::sort_terms<F>(terms);
  }
  if (check) {
    if (auto w = associativity_witness(A)) {
      auto [i, j, l] = *w;
      fail(Errc::NotAssociative, "witness triple (" + std::to_string(i) + "," + std::to_string(j) +
                                     "," + std::to_string(l) + ")");
    }
  }
  detail::detect_unital(A);
  return A;
}

/// Partition of n into positive parts.
struct Partition {
  std::vector<int> parts;

  int total() const {
    int s = 0;
    for (int a : parts) s += a;
    return s;
  }
  static Partition validated(std::vector<int> parts, int n) {
    Partition a{std::move(parts)};
    if (a.parts.empty()) fail(Errc::BadPartition, "empty partition");
    for (int x : a.parts)
      if (x < 1) fail(Errc::BadPartition, "partition part < 1");
    if (a.total() != n) fail(Errc::BadPartition, "partition does not sum to n");
    return a;
  }
};

namespace detail {

/// Shared builder for the matrix-unit family: basis E_ij x^t over the cells
/// selected by `pred`, with entries in GF(q^e) when e > 1 (finite base only).
template <FieldType F, class Pred>
AlgebraTable<F> build_matrix_pattern(const F& f, int n, int ext, Pred pred, std::string label) {
  if (n < 1) fail(Errc::BadInput, "matrix size must be >= 1");
  if (ext < 1) fail(Errc::BadInput, "entry extension degree must be >= 1");
  std::vector<Vec<F>> xpow;  // x^r mod mu expanded over the base field, r < 2*ext-1
  if (ext == 1) {
    xpow.push_back(Vec<F>{f.one()});
  } else {
    if constexpr (std::is_same_v<F, FiniteField>) {
      auto mu = canonical_irreducible(f, ext);
      Poly<F> cur = poly_from(f, Vec<F>{f.one()});
      Poly<F> x;
      x.c = {f.zero(), f.one()};
      for (int r = 0; r < 2 * ext - 1; ++r) {
        Vec<F> row(ext, f.zero());
        for (std::size_t i = 0; i < cur.c.size(); ++i) row[i] = cur.c[i];
        xpow.push_back(std::move(row));
        cur = poly_mod(f, poly_mul(f, cur, x), mu);
      }
    } else {
      fail(Errc::UnsupportedOverRationals, "extension entries require a finite base field");
    }
  }
  std::vector<std::tuple<int, int, int>> cells;  // (i, j, t)
  std::map<std::pair<int, int>, int> cell_base;  // (i,j) -> index of t=0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pred(i, j)) {
        cell_base[{i, j}] = int(cells.size());
        for (int t = 0; t < ext; ++t) cells.emplace_back(i, j, t);
      }
  AlgebraTable<F> A(f);
  A.dim = int(cells.size());
  A.label = std::move(label);
  A.products.assign(std::size_t(A.dim) * A.dim, {});
  for (int a = 0; a < A.dim; ++a) {
    auto [i, j, s] = cells[a];
    for (int b = 0; b < A.dim; ++b) {
      auto [k, l, t] = cells[b];
      if (j != k) continue;
      auto it = cell_base.find({i, l});
      if (it == cell_base.end()) continue;  // product leaves the pattern: only for non-closed patterns
      const auto& expansion = xpow[s + t];
      auto& terms = A.prod(a, b);
      for (int r = 0; r < int(expansion.size()); ++r)
        if (!f.is_zero(expansion[r])) terms.emplace_back(it->second + r, expansion[r]);
      detail::sort_terms<F>(terms);
    }
  }
  detail::detect_unital(A);
  return A;
}

}  // namespace detail

template <FieldType F>
AlgebraTable<F> make_matrix_algebra(const F& f, int n, int ext = 1) {
  std::string label = "M" + std::to_string(n) + (ext > 1 ? "(ext" + std::to_string(ext) + ")" : "");
  return detail::build_matrix_pattern(f, n, ext, [](int, int) { return true; }, std::move(label));
}

template <FieldType F>
AlgebraTable<F> make_upper_triangular(const F& f, int n, int ext = 1) {
  std::string label = "T" + std::to_string(n) + (ext > 1 ? "(ext" + std::to_string(ext) + ")" : "");
  return detail::build_matrix_pattern(f, n, ext, [](int i, int j) { return i <= j; }, std::move(label));
}

template <FieldType F>
AlgebraTable<F> make_strict_upper(const F& f, int n, int ext = 1) {
  std::string label = "U" + std::to_string(n) + (ext > 1 ? "(ext" + std::to_string(ext) + ")" : "");
  return detail::build_matrix_pattern(f, n, ext, [](int i, int j) { return i < j; }, std::move(label));
}

template <FieldType F>
AlgebraTable<F> make_parabolic(const F& f, int n, const Partition& alpha, int ext = 1) {
  Partition::validated(alpha.parts, n);
  std::vector<int> block(n);
  {
    int idx = 0, b = 0;
    for (int part : alpha.parts) {
      for (int t = 0; t < part; ++t) block[idx++] = b;
      ++b;
    }
  }
  return detail::build_matrix_pattern(
      f, n, ext, [block](int i, int j) { return block[i] <= block[j]; },
      "P" + std::to_string(n));
}

template <FieldType F>
AlgebraTable<F> make_block_diagonal(const F& f, int n, const Partition& alpha, int ext = 1) {
  Partition::validated(alpha.parts, n);
  std::vector<int> block(n);
  {
    int idx = 0, b = 0;
    for (int part : alpha.parts) {
      for (int t = 0; t < part; ++t) block[idx++] = b;
      ++b;
    }
  }
  return detail::build_matrix_pattern(
      f, n, ext, [block](int i, int j) { return block[i] == block[j]; },
      "L" + std::to_string(n));
}

/// GF(q^d) as a d-dimensional algebra over the base field, power basis
/// {1, y, ..., y^{d-1}} with y a root of the canonical irreducible polynomial.
inline AlgebraTable<FiniteField> make_field_extension(const FiniteField& f, int d) {
  if (d < 1) fail(Errc::BadInput, "extension degree must be >= 1");
  auto mu = canonical_irreducible(f, d);
  AlgebraTable<FiniteField> A(f);
  A.dim = d;
  A.label = "ext" + std::to_string(d);
  A.products.assign(std::size_t(d) * d, {});
  // powers y^r mod mu for r < 2d-1
  std::vector<Vec<FiniteField>> ypow;
  Poly<FiniteField> cur = poly_from(f, Vec<FiniteField>{f.one()});
  Poly<FiniteField> y;
  y.c = {f.zero(), f.one()};
  for (int r = 0; r < 2 * d - 1; ++r) {
    Vec<FiniteField> row(d, f.zero());
    for (std::size_t i = 0; i < cur.c.size(); ++i) row[i] = cur.c[i];
    ypow.push_back(std::move(row));
    cur = poly_mod(f, poly_mul(f, cur, y), mu);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto& terms = A.prod(i, j);
      const auto& exp = ypow[i + j];
      for (int r = 0; r < d; ++r)
        if (!f.is_zero(exp[r])) terms.emplace_back(r, exp[r]);
    }
  detail::detect_unital(A);
  return A;
}

template <FieldType F>
AlgebraTable<F> make_field_extension(const F&, int) {
  fail(Errc::UnsupportedOverRationals, "field_extension requires a finite base field");
}

/// Truncated path algebra kQ/(kQ+)^ell: basis is all paths of length < ell,
/// multiplication is concatenation where composable.
template <FieldType F>
AlgebraTable<F> make_truncated_quiver(const F& f, int vertices,
                                      const std::vector<std::pair<int, int>>& arrows, int ell) {
  if (vertices < 1) fail(Errc::BadInput, "quiver needs at least one vertex");
  if (ell < 2) fail(Errc::TruncationTooSmall, "truncation exponent must be >= 2");
  for (auto [s, d] : arrows)
    if (s < 0 || s >= vertices || d < 0 || d >= vertices)
      fail(Errc::IndexOutOfRange, "arrow endpoint out of range");
  struct Path {
    int src, dst;
    std::vector<int> arrows;
  };
  std::vector<Path> basis;
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int v = 0; v < vertices; ++v) {
    index[{v, {}}] = int(basis.size());
    basis.push_back({v, v, {}});
  }
  std::size_t level_begin = 0;
  for (int len = 1; len < ell; ++len) {
    std::size_t level_end = basis.size();
    for (std::size_t p = level_begin; p < level_end; ++p)
      for (int a = 0; a < int(arrows.size()); ++a) {
        if (basis[p].dst != arrows[a].first) continue;
        Path np{basis[p].src, arrows[a].second, basis[p].arrows};
        np.arrows.push_back(a);
        index[{np.src, np.arrows}] = int(basis.size());
        basis.push_back(std::move(np));
      }
    level_begin = level_end;
    if (level_begin == basis.size()) break;  // no longer paths exist
  }
  AlgebraTable<F> A(f);
  A.dim = int(basis.size());
  A.label = "quiver" + std::to_string(vertices) + "v" + std::to_string(arrows.size()) + "a l" +
            std::to_string(ell);
  A.products.assign(std::size_t(A.dim) * A.dim, {});
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b) {
      const Path& P = basis[a];
      const Path& Q = basis[b];
      if (P.dst != Q.src) continue;
      if (int(P.arrows.size() + Q.arrows.size()) >= ell) continue;
      std::vector<int> cat = P.arrows;
      cat.insert(cat.end(), Q.arrows.begin(), Q.arrows.end());
      auto it = index.find({P.src, cat});
      if (it == index.end()) fail(Errc::Internal, "path concatenation missing from basis");
      A.prod(a, b).emplace_back(it->second, f.one());
    }
  detail::detect_unital(A);
  return A;
}

template <FieldType F>
AlgebraTable<F> direct_product(const AlgebraTable<F>& A, const AlgebraTable<F>& B) {
  if (!(A.field.spec() == B.field.spec()))
    fail(Errc::FieldMismatch, "direct product requires the same ground field");
  const F& f = A.field;
  AlgebraTable<F> C(f);
  C.dim = A.dim + B.dim;
  C.label = (A.label.empty() ? "?" : A.label) + " x " + (B.label.empty() ? "?" : B.label);
  C.products.assign(std::size_t(C.dim) * C.dim, {});
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) C.prod(i, j) = A.prod(i, j);
  for (int i = 0; i < B.dim; ++i)
    for (int j = 0; j < B.dim; ++j) {
      auto& terms = C.prod(A.dim + i, A.dim + j);
      for (const auto& [k, c] : B.prod(i, j)) terms.emplace_back(A.dim + k, c);
    }
  detail::detect_unital(C);
  return C;
}

template <FieldType F>
AlgebraTable<F> make_zero_algebra(const F& f) {
  AlgebraTable<F> A(f);
  A.dim = 0;
  A.label = "0";
  return A;
}

/// A subspace of an algebra's ambient space that is verified multiplicatively
/// closed.
template <FieldType F>
struct SubalgebraHandle {
  const AlgebraTable<F>* parent = nullptr;
  Subspace<F> carrier;
  bool closed = false;
};

/// First basis pair (by row index) whose product escapes S, if any.
template <FieldType F>
std::optional<std::pair<int, int>> closure_witness(const AlgebraTable<F>& A, const Subspace<F>& S) {
  const F& f = A.field;
  for (std::size_t a = 0; a < S.rows.size(); ++a)
    for (std::size_t b = 0; b < S.rows.size(); ++b)
      if (!member(f, S, multiply(A, S.rows[a], S.rows[b]))) return std::make_pair(int(a), int(b));
  return std::nullopt;
}

template <FieldType F>
bool is_closed(const AlgebraTable<F>& A, const Subspace<F>& S) {
  return !closure_witness(A, S).has_value();
}

/// Smallest multiplicatively closed subspace containing the span of the
/// generators: fixed point of span <- span + span*span.
template <FieldType F>
SubalgebraHandle<F> closure(const AlgebraTable<F>& A, const Mat<F>& generators) {
  const F& f = A.field;
  auto S = generators.empty() ? zero_subspace<F>(A.dim) : rref(f, generators, A.dim);
  for (;;) {
    Mat<F> prods;
    for (std::size_t a = 0; a < S.rows.size(); ++a)
      for (std::size_t b = 0; b < S.rows.size(); ++b) {
        auto w = multiply(A, S.rows[a], S.rows[b]);
        if (!member(f, S, w)) prods.push_back(std::move(w));
      }
    if (prods.empty()) break;
    Mat<F> all = S.rows;
    all.insert(all.end(), prods.begin(), prods.end());
    S = rref(f, std::move(all), A.dim);
  }
  return SubalgebraHandle<F>{&A, std::move(S), true};
}

/// Structure constants of a closed subspace in its echelon basis, plus the
/// embedding (rows of the carrier).
template <FieldType F>
std::pair<AlgebraTable<F>, Mat<F>> induced_subalgebra(const AlgebraTable<F>& A,
                                                      const Subspace<F>& S) {
  const F& f = A.field;
  AlgebraTable<F> B(f);
  B.dim = S.dim();
  B.label = A.label.empty() ? "sub" : A.label + "|sub";
  B.products.assign(std::size_t(B.dim) * B.dim, {});
  for (int a = 0; a < B.dim; ++a)
    for (int b = 0; b < B.dim; ++b) {
      auto w = multiply(A, S.rows[a], S.rows[b]);
      auto coords = coords_in(f, S, w);
      if (!coords)
        fail(Errc::NotClosed, "product of basis rows " + std::to_string(a) + "," +
                                  std::to_string(b) + " leaves the carrier");
      auto& terms = B.prod(a, b);
      for (int k = 0; k < B.dim; ++k)
        if (!f.is_zero((*coords)[k])) terms.emplace_back(k, (*coords)[k]);
    }
  detail::detect_unital(B);
  return {std::move(B), S.rows};
}

/// Quotient A/I by a verified two-sided ideal; coset representatives are the
/// complement-basis standard vectors. Returns the quotient table and the
/// projection matrix (ambient basis -> quotient coordinates).
template <FieldType F>
std::pair<AlgebraTable<F>, Mat<F>> quotient_by_ideal(const AlgebraTable<F>& A,
                                                     const Subspace<F>& I) {
  const F& f = A.field;
  if (I.ambient != A.dim) fail(Errc::AmbientMismatch, "ideal ambient mismatch");
  for (int i = 0; i < A.dim; ++i) {
    auto ei = unit_vec(f, A.dim, i);
    for (std::size_t r = 0; r < I.rows.size(); ++r) {
      if (!member(f, I, multiply(A, ei, I.rows[r])))
        fail(Errc::NotAnIdeal, "e_" + std::to_string(i) + " * (ideal row " + std::to_string(r) +
                                   ") leaves the subspace");
      if (!member(f, I, multiply(A, I.rows[r], ei)))
        fail(Errc::NotAnIdeal, "(ideal row " + std::to_string(r) + ") * e_" + std::to_string(i) +
                                   " leaves the subspace");
    }
  }
  auto cols = complement_columns(I);
  const int q = int(cols.size());
  auto project = [&](const Vec<F>& v) {
    auto res = reduce_mod(f, I, v);
    Vec<F> out(q, f.zero());
    for (int t = 0; t < q; ++t) out[t] = res[cols[t]];
    return out;
  };
  AlgebraTable<F> Q(f);
  Q.dim = q;
  Q.label = A.label.empty() ? "quot" : A.label + "/I";
  Q.products.assign(std::size_t(q) * q, {});
  for (int a = 0; a < q; ++a) {
    auto ra = unit_vec(f, A.dim, cols[a]);
    for (int b = 0; b < q; ++b) {
      auto rb = unit_vec(f, A.dim, cols[b]);
      auto w = project(multiply(A, ra, rb));
      auto& terms = Q.prod(a, b);
      for (int k = 0; k < q; ++k)
        if (!f.is_zero(w[k])) terms.emplace_back(k, w[k]);
    }
  }
  Mat<F> proj;
  for (int i = 0; i < A.dim; ++i) proj.push_back(project(unit_vec(f, A.dim, i)));
  detail::detect_unital(Q);
  return {std::move(Q), std::move(proj)};
}

/// Lift a subspace of the quotient back through the projection built by
/// quotient_by_ideal: preimage = span(lifted rows) + I.
template <FieldType F>
Subspace<F> preimage(const F& f, const AlgebraTable<F>& A, const Subspace<F>& I,
                     const Subspace<F>& sub_of_quotient) {
  auto cols = complement_columns(I);
  Mat<F> rows = I.rows;
  for (const auto& qr : sub_of_quotient.rows) {
    Vec<F> lift(A.dim, f.zero());
    for (std::size_t t = 0; t < cols.size(); ++t) lift[cols[t]] = qr[t];
    rows.push_back(std::move(lift));
  }
  return rref(f, std::move(rows), A.dim);
}

/// Push a subspace of A forward along the quotient projection.
template <FieldType F>
Subspace<F> pushforward(const F& f, const Subspace<F>& I, const Subspace<F>& S, int quotient_dim) {
  auto cols = complement_columns(I);
  Mat<F> rows;
  for (const auto& r : S.rows) {
    auto res = reduce_mod(f, I, r);
    Vec<F> out(quotient_dim, f.zero());
    for (std::size_t t = 0; t < cols.size(); ++t) out[t] = res[cols[t]];
    rows.push_back(std::move(out));
  }
  return rref(f, std::move(rows), quotient_dim);
}

/// Two-sided identity of the algebra, when one exists (not necessarily a
/// basis element).
template <FieldType F>
std::optional<Vec<F>> find_identity(const AlgebraTable<F>& A) {
  const F& f = A.field;
  if (A.dim == 0) return std::nullopt;
  if (A.unital) return unit_vec(f, A.dim, *A.unital);
  // x with x e_j = e_j and e_j x = e_j for all j; row t of M is the
  // concatenated constraint coefficients of basis element e_t.
  Mat<F> M(A.dim, Vec<F>(2 * A.dim * A.dim, f.zero()));
  Vec<F> rhs(2 * A.dim * A.dim, f.zero());
  for (int t = 0; t < A.dim; ++t)
    for (int j = 0; j < A.dim; ++j) {
      for (const auto& [k, c] : A.prod(t, j)) M[t][j * A.dim + k] = f.add(M[t][j * A.dim + k], c);
      for (const auto& [k, c] : A.prod(j, t))
        M[t][A.dim * A.dim + j * A.dim + k] = f.add(M[t][A.dim * A.dim + j * A.dim + k], c);
    }
  for (int j = 0; j < A.dim; ++j) {
    rhs[j * A.dim + j] = f.one();
    rhs[A.dim * A.dim + j * A.dim + j] = f.one();
  }
  return solve_left(f, M, rhs, 2 * A.dim * A.dim);
}

/// Basis change: rows of P are the new basis expressed in the old one.
template <FieldType F>
AlgebraTable<F> conjugate_table(const AlgebraTable<F>& A, const Mat<F>& P) {
  const F& f = A.field;
  if (int(P.size()) != A.dim) fail(Errc::DimensionMismatch, "basis change must be square");
  auto chk = rref(f, P, A.dim);
  if (chk.dim() != A.dim) fail(Errc::BadInput, "basis change matrix is singular");
  AlgebraTable<F> B(f);
  B.dim = A.dim;
  B.label = A.label.empty() ? "conj" : A.label + "~";
  B.products.assign(std::size_t(A.dim) * A.dim, {});
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      auto w = multiply(A, P[i], P[j]);
      auto coords = solve_left(f, P, w, A.dim);
      if (!coords) fail(Errc::Internal, "conjugation solve failed");
      auto& terms = B.prod(i, j);
      for (int k = 0; k < A.dim; ++k)
        if (!f.is_zero((*coords)[k])) terms.emplace_back(k, (*coords)[k]);
    }
  detail::detect_unital(B);
  return B;
}

/// Deterministic one-line serialization of the mathematical content (field,
/// dimension, structure constants). Labels are cosmetic and excluded.
template <FieldType F>
std::string serialize_algebra(const AlgebraTable<F>& A) {
  const F& f = A.field;
  std::string s = "field{" + field_spec_str(A.field.spec()) + "} dim " + std::to_string(A.dim) +
                  " products[";
  bool first = true;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (const auto& [k, c] : A.prod(i, j)) {
        if (!first) s += ';';
        first = false;
        s += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + f.str(c);
      }
  s += "]";
  return s;
}

}  // namespace algchain

#endif
