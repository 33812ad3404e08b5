#ifndef ALGCHAIN_STRUCTURE_HPP
#define ALGCHAIN_STRUCTURE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "algchain/algebra.hpp"
#include "algchain/poly.hpp"

namespace algchain {

struct NilpotencyInfo {
  bool nilpotent = false;
  int index = 0;  // smallest t with A^t = 0, when nilpotent
};

/// Descending chain A >= A^2 >= A^3 ... until stable.
template <FieldType F>
NilpotencyInfo is_nilpotent(const AlgebraTable<F>& A) {
  const F& f = A.field;
  auto power = full_subspace(f, A.dim);
  if (A.dim == 0) return {true, 1};
  int t = 1;
  for (;;) {
    if (power.dim() == 0) return {true, t};
    Mat<F> next_rows;
    for (const auto& u : power.rows)
      for (int j = 0; j < A.dim; ++j) next_rows.push_back(multiply(A, u, unit_vec(f, A.dim, j)));
    auto next = next_rows.empty() ? zero_subspace<F>(A.dim) : rref(f, next_rows, A.dim);
    ++t;
    if (next.dim() == power.dim()) return {false, 0};
    power = std::move(next);
  }
}

/// Solution space of [x, e_i] = 0 for every basis element.
template <FieldType F>
Subspace<F> center(const AlgebraTable<F>& A) {
  const F& f = A.field;
  if (A.dim == 0) return zero_subspace<F>(0);
  Mat<F> M(A.dim, Vec<F>(std::size_t(A.dim) * A.dim, f.zero()));
  for (int t = 0; t < A.dim; ++t)
    for (int i = 0; i < A.dim; ++i) {
      for (const auto& [k, c] : A.prod(t, i))
        M[t][std::size_t(i) * A.dim + k] = f.add(M[t][std::size_t(i) * A.dim + k], c);
      for (const auto& [k, c] : A.prod(i, t))
        M[t][std::size_t(i) * A.dim + k] = f.sub(M[t][std::size_t(i) * A.dim + k], c);
    }
  return left_kernel(f, M, A.dim * A.dim);
}

/// Solution space of [x, s] = 0 over the basis rows of S; always closed.
template <FieldType F>
SubalgebraHandle<F> centralizer(const AlgebraTable<F>& A, const Subspace<F>& S) {
  const F& f = A.field;
  if (S.ambient != A.dim) fail(Errc::AmbientMismatch, "centralizer ambient mismatch");
  if (S.rows.empty()) return SubalgebraHandle<F>{&A, full_subspace(f, A.dim), true};
  Mat<F> M(A.dim, Vec<F>(S.rows.size() * A.dim, f.zero()));
  for (int t = 0; t < A.dim; ++t) {
    auto et = unit_vec(f, A.dim, t);
    for (std::size_t r = 0; r < S.rows.size(); ++r) {
      auto comm = vec_sub(f, multiply(A, et, S.rows[r]), multiply(A, S.rows[r], et));
      for (int k = 0; k < A.dim; ++k) M[t][r * A.dim + k] = comm[k];
    }
  }
  auto C = left_kernel(f, M, int(S.rows.size()) * A.dim);
  return SubalgebraHandle<F>{&A, std::move(C), true};
}

/// k*1 + A; the adjoined identity is the last basis element.
template <FieldType F>
AlgebraTable<F> unitalize(const AlgebraTable<F>& A) {
  const F& f = A.field;
  AlgebraTable<F> B(f);
  B.dim = A.dim + 1;
  B.label = A.label + "^1";
  B.products.assign(std::size_t(B.dim) * B.dim, {});
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) B.prod(i, j) = A.prod(i, j);
  const int u = A.dim;
  for (int i = 0; i <= u; ++i) {
    B.prod(u, i).emplace_back(i, f.one());
    if (i != u) B.prod(i, u).emplace_back(i, f.one());
  }
  detail::sort_terms<F>(B.prod(u, u));
  detail::detect_unital(B);
  return B;
}

/// Matrix of left multiplication by v on the algebra's basis.
template <FieldType F>
Mat<F> left_mult_matrix(const AlgebraTable<F>& A, const Vec<F>& v) {
  const F& f = A.field;
  Mat<F> M(A.dim, Vec<F>(A.dim, f.zero()));
  for (int j = 0; j < A.dim; ++j) {
    auto w = multiply(A, v, unit_vec(f, A.dim, j));
    for (int k = 0; k < A.dim; ++k) M[j][k] = w[k];
  }
  return M;
}

namespace detail {

/// Restrict a subspace of the unitalization to the original algebra by
/// dropping the unit coordinate; every basis row must have zero there.
template <FieldType F>
Subspace<F> strip_unit_coordinate(const F& f, const Subspace<F>& S, int dim) {
  Mat<F> rows;
  for (const auto& r : S.rows) {
    if (!f.is_zero(r[dim]))
      fail(Errc::Internal, "radical candidate escapes the algebra");
    rows.push_back(Vec<F>(r.begin(), r.begin() + dim));
  }
  return rows.empty() ? zero_subspace<F>(dim) : rref(f, rows, dim);
}

/// Radical candidate over the rationals: kernel of the trace form
/// T(x,y) = trace(L_{xy}) on the unitalization.
inline Subspace<RationalField> radical_candidate(const AlgebraTable<RationalField>& A) {
  const RationalField& f = A.field;
  if (A.dim == 0) return zero_subspace<RationalField>(0);
  auto A1 = unitalize(A);
  const int n = A1.dim;
  // trace of left multiplication by each basis element, so tr(L_v) follows by
  // linearity
  Vec<RationalField> basis_trace(n, f.zero());
  for (int k = 0; k < n; ++k) {
    auto L = left_mult_matrix(A1, unit_vec(f, n, k));
    for (int j = 0; j < n; ++j) basis_trace[k] = f.add(basis_trace[k], L[j][j]);
  }
  Mat<RationalField> gram(n, Vec<RationalField>(n, f.zero()));
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u) {
      auto prod = multiply(A1, unit_vec(f, n, t), unit_vec(f, n, u));
      auto tr = f.zero();
      for (int k = 0; k < n; ++k)
        if (!f.is_zero(prod[k])) tr = f.add(tr, f.mul(prod[k], basis_trace[k]));
      gram[t][u] = tr;
    }
  auto ker = left_kernel(f, gram, n);
  return strip_unit_coordinate(f, ker, A.dim);
}

/// Radical candidate over GF(q), characteristic p, by iterated refinement.
/// Stage i keeps x with e_{p^i}(L_{xy}) = 0 for all y in the current space,
/// where e_j is the j-th elementary symmetric function of the eigenvalues of
/// the left-multiplication matrix on the unitalization. Each stage is a
/// linear system after an inverse-Frobenius twist of the coefficients.
inline Subspace<FiniteField> radical_candidate(const AlgebraTable<FiniteField>& A) {
  const FiniteField& f = A.field;
  if (A.dim == 0) return zero_subspace<FiniteField>(0);
  auto A1 = unitalize(A);
  const int n = A1.dim;
  const std::uint32_t p = f.characteristic();
  auto B = full_subspace(f, n);
  std::uint64_t pi = 1;
  for (std::uint32_t i = 0; pi <= std::uint64_t(n); ++i, pi *= p) {
    if (B.dim() == 0) break;
    const int r = B.dim();
    // e_{p^i}(M) = (-1)^{p^i} * coeff of t^{n - p^i} in charpoly(M)
    Mat<FiniteField> M(r, Vec<FiniteField>(r, f.zero()));
    for (int t = 0; t < r; ++t)
      for (int y = 0; y < r; ++y) {
        auto prod = multiply(A1, B.rows[t], B.rows[y]);
        auto cp = charpoly(f, left_mult_matrix(A1, prod));
        FiniteField::Elem ej = 0;
        if (std::uint64_t(n) >= pi) {
          ej = cp.c.size() > std::size_t(n - pi) ? cp.c[std::size_t(n - pi)] : 0;
          if (pi % 2 == 1 && p != 2) ej = f.neg(ej);
        }
        M[t][y] = f.frobenius_inv(ej, i);
      }
    auto lambda = left_kernel(f, M, r);
    Mat<FiniteField> rows;
    for (const auto& lam : lambda.rows) {
      Vec<FiniteField> v(n, 0);
      for (int t = 0; t < r; ++t)
        if (lam[t]) axpy(f, v, lam[t], B.rows[t]);
      rows.push_back(std::move(v));
    }
    B = rows.empty() ? zero_subspace<FiniteField>(n) : rref(f, rows, n);
  }
  return strip_unit_coordinate(f, B, A.dim);
}

template <FieldType F>
bool is_two_sided_ideal(const AlgebraTable<F>& A, const Subspace<F>& I) {
  const F& f = A.field;
  for (int i = 0; i < A.dim; ++i) {
    auto ei = unit_vec(f, A.dim, i);
    for (const auto& r : I.rows) {
      if (!member(f, I, multiply(A, ei, r))) return false;
      if (!member(f, I, multiply(A, r, ei))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// The Jacobson radical, certified: the candidate is checked to be a
/// nilpotent two-sided ideal whose quotient has zero candidate, which pins it
/// as the largest nilpotent ideal independently of the algorithm that
/// produced it.
template <FieldType F>
Subspace<F> radical(const AlgebraTable<F>& A) {
  const F& f = A.field;
  auto R = detail::radical_candidate(A);
  if (!detail::is_two_sided_ideal(A, R))
    fail(Errc::Internal, "radical certification failed: candidate is not an ideal");
  if (R.dim() > 0) {
    auto [ind, embed] = induced_subalgebra(A, R);
    if (!is_nilpotent(ind).nilpotent)
      fail(Errc::Internal, "radical certification failed: candidate not nilpotent");
  }
  auto [Q, proj] = quotient_by_ideal(A, R);
  if (detail::radical_candidate(Q).dim() != 0)
    fail(Errc::Internal, "radical certification failed: quotient not semisimple");
  return R;
}

/// One simple factor of A/J(A).
template <FieldType F>
struct WedderburnFactor {
  int n = 0;  // matrix size
  int d = 0;  // center degree over the ground field
  int e = 1;  // division degree of D over its center (1 over finite fields)
  bool commutative_division = true;
  bool resolved = true;
  std::string stuck_minpoly;  // diagnostic for unresolved rational factors
  int block_dim = 0;          // dimension of the factor inside A/J
  Subspace<F> carrier_in_quotient;
  Subspace<F> carrier_in_A;  // preimage under the projection; contains J(A)
  Vec<F> idempotent;         // central idempotent of the factor, quotient coords
};

template <FieldType F>
struct WedderburnReport {
  int radical_dim = 0;
  Subspace<F> radical;
  std::vector<WedderburnFactor<F>> factors;
  bool fully_resolved = true;
  AlgebraTable<F> quotient;
  Mat<F> projection;  // ambient basis -> quotient coordinates

  explicit WedderburnReport(F f) : quotient(std::move(f)) {}
};

namespace detail {

/// Minimal polynomial of w relative to the idempotent unit of its block.
template <FieldType F>
Poly<F> minpoly_rel(const AlgebraTable<F>& Q, const Vec<F>& unit, const Vec<F>& w) {
  const F& f = Q.field;
  Mat<F> powers{unit};
  Vec<F> cur = unit;
  for (;;) {
    cur = multiply(Q, cur, w);
    auto span = rref(f, powers, Q.dim);
    if (member(f, span, cur)) {
      // express cur in the power basis, not the echelon one
      auto sol = solve_left(f, powers, cur, Q.dim);
      if (!sol) fail(Errc::Internal, "minpoly solve failed");
      Poly<F> m;
      m.c.assign(powers.size() + 1, f.zero());
      for (std::size_t i = 0; i < powers.size(); ++i) m.c[i] = f.neg((*sol)[i]);
      m.c[powers.size()] = f.one();
      return m;
    }
    powers.push_back(cur);
  }
}

inline std::vector<FiniteField::Elem> poly_roots(const FiniteField& f, const Poly<FiniteField>& m) {
  std::vector<FiniteField::Elem> roots;
  for (FiniteField::Elem c = 0; c < f.q(); ++c)
    if (f.is_zero(poly_eval(f, m, c))) roots.push_back(c);
  return roots;
}

/// All rational roots of a monic polynomial over the rationals, by divisor
/// search on the cleared-denominator form.
inline std::vector<Rational> poly_roots(const RationalField& f, const Poly<RationalField>& m) {
  std::vector<Rational> roots;
  if (m.is_zero()) return roots;
  // clear denominators
  BigInt lcm = 1;
  for (const auto& c : m.c) {
    BigInt den = boost::multiprecision::denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<BigInt> ic;
  for (const auto& c : m.c)
    ic.push_back(BigInt(boost::multiprecision::numerator(c) * (lcm / boost::multiprecision::denominator(c))));
  BigInt a0 = ic.front(), an = ic.back();
  auto divisors = [](BigInt x) {
    std::vector<BigInt> out;
    if (x < 0) x = -x;
    if (x == 0) return out;
    for (BigInt d = 1; d * d <= x; ++d)
      if (x % d == 0) {
        out.push_back(d);
        out.push_back(x / d);
      }
    return out;
  };
  if (a0 == 0) {
    roots.push_back(Rational(0));
    // divide out t and recurse on the cofactor
    Poly<RationalField> rest;
    rest.c.assign(m.c.begin() + 1, m.c.end());
    auto sub = poly_roots(f, rest);
    for (auto& r : sub)
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    return roots;
  }
  for (const auto& u : divisors(a0))
    for (const auto& v : divisors(an)) {
      for (int sign = 0; sign < 2; ++sign) {
        Rational cand(sign ? -u : u, v);
        if (f.is_zero(poly_eval(f, m, cand)) &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Split an idempotent block by the spectral projectors of w = eps * v.
/// Returns the refined idempotents (or just eps when the minimal polynomial
/// is linear). Requires the minimal polynomial to split into distinct linear
/// factors over the field for a complete split; roots not found stay lumped
/// in a remainder idempotent.
template <FieldType F>
std::vector<Vec<F>> split_block(const AlgebraTable<F>& Q, const Vec<F>& eps, const Vec<F>& w,
                                const Poly<F>& m, const std::vector<typename F::Elem>& roots) {
  const F& f = Q.field;
  if (m.degree() <= 1 || roots.empty()) return {eps};
  std::vector<Vec<F>> parts;
  Vec<F> covered(Q.dim, f.zero());
  for (const auto& c : roots) {
    // pi_c = prod_{c' != c} (w - c' eps) / (c - c'), including the rootless part
    // handled by polynomial division: pi_c = (m / (t - c))(w) * inv((m/(t-c))(c))
    Poly<F> lin;
    lin.c = {f.neg(c), f.one()};
    auto quo = poly_divmod(f, m, lin).first;
    auto denom = poly_eval(f, quo, c);
    if (f.is_zero(denom)) fail(Errc::Internal, "repeated root in semisimple minimal polynomial");
    auto scale = f.inv(denom);
    // evaluate quo at w relative to eps
    Vec<F> acc(Q.dim, f.zero());
    Vec<F> power = eps;
    for (int i = 0; i <= quo.degree(); ++i) {
      if (!f.is_zero(quo.c[i])) axpy(f, acc, f.mul(quo.c[i], scale), power);
      power = multiply(Q, power, w);
    }
    parts.push_back(acc);
    covered = vec_add(f, covered, acc);
  }
  auto rest = vec_sub(f, eps, covered);
  if (!is_zero_vec(f, rest)) parts.push_back(rest);
  return parts;
}

template <FieldType F>
Subspace<F> image_of_left_mult(const AlgebraTable<F>& Q, const Vec<F>& eps) {
  const F& f = Q.field;
  Mat<F> rows;
  for (int j = 0; j < Q.dim; ++j) rows.push_back(multiply(Q, eps, unit_vec(f, Q.dim, j)));
  return rref(f, rows, Q.dim);
}

template <FieldType F>
bool sub_commutative(const AlgebraTable<F>& Q, const Subspace<F>& S) {
  const F& f = Q.field;
  for (std::size_t a = 0; a < S.rows.size(); ++a)
    for (std::size_t b = a + 1; b < S.rows.size(); ++b)
      if (!vec_eq(f, multiply(Q, S.rows[a], S.rows[b]), multiply(Q, S.rows[b], S.rows[a])))
        return false;
  return true;
}

inline long long isqrt_exact(long long x) {
  long long r = 0;
  while (r * r < x) ++r;
  return r * r == x ? r : -1;
}

}  // namespace detail

/// Wedderburn decomposition of A/J(A). Over finite fields the report is always
/// fully resolved; over the rationals factors that cannot be verified are
/// returned unresolved (never guessed).
template <FieldType F>
WedderburnReport<F> wedderburn(const AlgebraTable<F>& A) {
  const F& f = A.field;
  WedderburnReport<F> rep(f);
  rep.radical = radical(A);
  rep.radical_dim = rep.radical.dim();
  auto [Q, proj] = quotient_by_ideal(A, rep.radical);
  rep.quotient = Q;
  rep.projection = proj;
  if (Q.dim == 0) return rep;
  auto one = find_identity(Q);
  if (!one) fail(Errc::Internal, "semisimple quotient has no identity");
  auto Z = center(Q);

  std::vector<Vec<F>> blocks;
  if constexpr (std::is_same_v<F, FiniteField>) {
    // Fixed space of z -> z^q inside the center is spanned by the primitive
    // central idempotents; min polys of its elements split into distinct
    // linear factors, so root search plus refinement is complete.
    const std::uint64_t q = f.q();
    Mat<F> M;
    for (std::size_t r = 0; r < Z.rows.size(); ++r) {
      // z^q by square and multiply inside the quotient algebra
      Vec<F> zq = *one;
      Vec<F> cur = Z.rows[r];
      std::uint64_t exp = q;
      while (exp) {
        if (exp & 1) zq = multiply(Q, zq, cur);
        cur = multiply(Q, cur, cur);
        exp >>= 1;
      }
      auto diff = vec_sub(f, zq, Z.rows[r]);
      auto coords = coords_in(f, Z, diff);
      if (!coords) fail(Errc::Internal, "center not closed under q-power map");
      M.push_back(*coords);
    }
    auto lambda = M.empty() ? zero_subspace<F>(0) : left_kernel(f, M, Z.dim());
    Mat<F> vrows;
    for (const auto& lam : lambda.rows) {
      Vec<F> v(Q.dim, f.zero());
      for (int t = 0; t < Z.dim(); ++t)
        if (!f.is_zero(lam[t])) axpy(f, v, lam[t], Z.rows[t]);
      vrows.push_back(std::move(v));
    }
    auto V = vrows.empty() ? zero_subspace<F>(Q.dim) : rref(f, vrows, Q.dim);
    blocks = {*one};
    for (const auto& v : V.rows) {
      std::vector<Vec<F>> next;
      for (const auto& eps : blocks) {
        auto w = multiply(Q, eps, v);
        auto m = detail::minpoly_rel(Q, eps, w);
        auto roots = detail::poly_roots(f, m);
        Poly<F> split = poly_from(f, Vec<F>{f.one()});
        for (const auto& c : roots) {
          Poly<F> lin;
          lin.c = {f.neg(c), f.one()};
          split = poly_mul(f, split, lin);
        }
        if (!(split.c == m.c))
          fail(Errc::Internal, "central minimal polynomial did not split over the field");
        auto parts = detail::split_block(Q, eps, w, m, roots);
        next.insert(next.end(), parts.begin(), parts.end());
      }
      blocks = std::move(next);
    }
    if (int(blocks.size()) != V.dim())
      fail(Errc::Internal, "central idempotent refinement incomplete");
  } else {
    // Rational path: refine with rational root search; blocks whose center
    // does not split stay unresolved.
    blocks = {*one};
    for (;;) {
      bool changed = false;
      std::vector<Vec<F>> next;
      for (const auto& eps : blocks) {
        Mat<F> zeps_rows;
        for (const auto& z : Z.rows) zeps_rows.push_back(multiply(Q, eps, z));
        auto Zeps = rref(f, zeps_rows, Q.dim);
        bool split_found = false;
        for (const auto& w0 : Zeps.rows) {
          auto w = multiply(Q, eps, w0);
          auto m = detail::minpoly_rel(Q, eps, w);
          if (m.degree() <= 1) continue;
          auto roots = detail::poly_roots(f, m);
          if (roots.empty()) continue;
          auto parts = detail::split_block(Q, eps, w, m, roots);
          if (parts.size() > 1) {
            next.insert(next.end(), parts.begin(), parts.end());
            split_found = true;
            changed = true;
            break;
          }
        }
        if (!split_found) next.push_back(eps);
      }
      blocks = std::move(next);
      if (!changed) break;
    }
  }

  // Assemble per-block factor data.
  for (const auto& eps : blocks) {
    WedderburnFactor<F> fac;
    fac.idempotent = eps;
    fac.carrier_in_quotient = detail::image_of_left_mult(Q, eps);
    fac.block_dim = fac.carrier_in_quotient.dim();
    Mat<F> zrows;
    for (const auto& z : Z.rows) zrows.push_back(multiply(Q, eps, z));
    auto Zeps = rref(f, zrows, Q.dim);
    const int dz = Zeps.dim();
    fac.carrier_in_A = preimage(f, A, rep.radical, fac.carrier_in_quotient);
    if constexpr (std::is_same_v<F, FiniteField>) {
      fac.d = dz;
      long long n = detail::isqrt_exact(fac.block_dim / dz);
      if (fac.block_dim % dz != 0 || n < 0)
        fail(Errc::Internal, "factor dimension is not n^2 * d");
      fac.n = int(n);
      fac.e = 1;
      fac.commutative_division = true;
    } else {
      if (dz > 1) {
        fac.resolved = false;
        // record the stuck center factor's minimal polynomial
        for (const auto& w0 : Zeps.rows) {
          auto m = detail::minpoly_rel(Q, eps, multiply(Q, eps, w0));
          if (m.degree() > 1) {
            fac.stuck_minpoly = poly_str(f, m);
            break;
          }
        }
        fac.commutative_division = detail::sub_commutative(Q, fac.carrier_in_quotient);
        fac.d = dz;
      } else if (fac.block_dim == 1) {
        fac.n = fac.d = fac.e = 1;
        fac.commutative_division = true;
      } else {
        // center is the ground field; verified split iff a basis product
        // generates a left ideal of dimension exactly sqrt(block_dim)
        long long n = detail::isqrt_exact(fac.block_dim);
        bool verified = false;
        if (n > 0) {
          Mat<F> cands = fac.carrier_in_quotient.rows;
          for (std::size_t a = 0; a < fac.carrier_in_quotient.rows.size() && cands.size() < 200; ++a)
            for (std::size_t b = 0; b < fac.carrier_in_quotient.rows.size(); ++b)
              cands.push_back(multiply(Q, fac.carrier_in_quotient.rows[a],
                                       fac.carrier_in_quotient.rows[b]));
          for (const auto& x : cands) {
            if (is_zero_vec(f, x)) continue;
            Mat<F> li;
            for (const auto& b : fac.carrier_in_quotient.rows) li.push_back(multiply(Q, b, x));
            if (rref(f, li, Q.dim).dim() == n) {
              verified = true;
              break;
            }
          }
        }
        if (verified) {
          fac.n = int(n);
          fac.d = 1;
          fac.e = 1;
          fac.commutative_division = true;
        } else {
          fac.resolved = false;
          fac.d = 1;
          fac.stuck_minpoly = "(split not verifiable: block dim " +
                              std::to_string(fac.block_dim) + " over a rational center)";
          fac.commutative_division = detail::sub_commutative(Q, fac.carrier_in_quotient);
        }
      }
    }
    if (!fac.resolved) rep.fully_resolved = false;
    rep.factors.push_back(std::move(fac));
  }
  std::sort(rep.factors.begin(), rep.factors.end(), [](const auto& a, const auto& b) {
    if (a.resolved != b.resolved) return a.resolved > b.resolved;
    if (a.n != b.n) return a.n > b.n;
    if (a.d != b.d) return a.d > b.d;
    if (a.e != b.e) return a.e > b.e;
    if (a.block_dim != b.block_dim) return a.block_dim > b.block_dim;
    return a.carrier_in_quotient.pivots < b.carrier_in_quotient.pivots;
  });

  // dimension accounting
  long long total = rep.radical_dim;
  for (const auto& fac : rep.factors) total += fac.block_dim;
  if (total != A.dim) fail(Errc::Internal, "Wedderburn dimension accounting failed");
  if (rep.fully_resolved) {
    long long acc = rep.radical_dim;
    for (const auto& fac : rep.factors) acc += 1LL * fac.n * fac.n * fac.d * fac.e * fac.e;
    if (acc != A.dim) fail(Errc::Internal, "factor dimensions inconsistent");
  }
  return rep;
}

template <FieldType F>
const WedderburnReport<F>& require_resolved(const WedderburnReport<F>& rep) {
  if (!rep.fully_resolved) {
    std::string diag;
    for (const auto& fac : rep.factors)
      if (!fac.resolved) {
        diag = fac.stuck_minpoly;
        break;
      }
    fail(Errc::UnresolvedFactor, diag.empty() ? "unresolved simple factor" : diag);
  }
  return rep;
}

/// Preimage of the product of the commutative simple factors; contains J(A).
template <FieldType F>
Subspace<F> solvable_radical(const AlgebraTable<F>& A, const WedderburnReport<F>& rep) {
  const F& f = A.field;
  auto R = rep.radical;
  for (const auto& fac : rep.factors) {
    bool commutative = fac.resolved ? (fac.n == 1 && fac.e == 1) : fac.commutative_division;
    if (!fac.resolved && !commutative)
      fail(Errc::NoncommutativeDivisionFactor,
           "cannot certify commutativity of an unresolved factor");
    if (commutative) R = subspace_sum(f, R, fac.carrier_in_A);
  }
  return R;
}

template <FieldType F>
Subspace<F> solvable_radical(const AlgebraTable<F>& A) {
  auto rep = wedderburn(A);
  return solvable_radical(A, rep);
}

}  // namespace algchain

#endif
