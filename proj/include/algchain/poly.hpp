#ifndef ALGCHAIN_POLY_HPP
#define ALGCHAIN_POLY_HPP

#include <utility>
#include <vector>

#include "algchain/fields.hpp"
#include "algchain/linalg.hpp"

namespace algchain {

/// Dense little-endian polynomials with coefficients in a runtime field.
template <FieldType F>
struct Poly {
  Vec<F> c;  // c[i] multiplies x^i; normalized: no trailing zeros

  int degree() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

template <FieldType F>
void poly_trim(const F& f, Poly<F>& a) {
  while (!a.c.empty() && f.is_zero(a.c.back())) a.c.pop_back();
}

template <FieldType F>
Poly<F> poly_from(const F& f, Vec<F> coeffs) {
  Poly<F> p{std::move(coeffs)};
  poly_trim(f, p);
  return p;
}

template <FieldType F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = f.add(r.c[i], b.c[i]);
  poly_trim(f, r);
  return r;
}

template <FieldType F>
Poly<F> poly_scale(const F& f, const typename F::Elem& s, const Poly<F>& a) {
  Poly<F> r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(f.mul(s, x));
  poly_trim(f, r);
  return r;
}

template <FieldType F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly<F> r;
  r.c.assign(a.c.size() + b.c.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  poly_trim(f, r);
  return r;
}

/// Quotient and remainder; divisor must be nonzero.
template <FieldType F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  Poly<F> q;
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, f.zero());
  const auto lead_inv = f.inv(b.c.back());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    auto coef = f.mul(a.c.back(), lead_inv);
    q.c[shift] = coef;
    for (int i = 0; i <= b.degree(); ++i)
      a.c[shift + i] = f.sub(a.c[shift + i], f.mul(coef, b.c[i]));
    poly_trim(f, a);
  }
  poly_trim(f, q);
  return {q, a};
}

template <FieldType F>
Poly<F> poly_mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
  return poly_divmod(f, a, b).second;
}

template <FieldType F>
Poly<F> poly_monic(const F& f, Poly<F> a) {
  if (a.is_zero()) return a;
  auto inv = f.inv(a.c.back());
  for (auto& x : a.c) x = f.mul(inv, x);
  return a;
}

template <FieldType F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, std::move(a));
}

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
template <FieldType F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_extgcd(const F& f, Poly<F> a, Poly<F> b) {
  Poly<F> u0 = poly_from(f, Vec<F>{f.one()}), v0;
  Poly<F> u1, v1 = poly_from(f, Vec<F>{f.one()});
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(f, a, b);
    a = std::move(b);
    b = std::move(r);
    auto u2 = poly_add(f, u0, poly_scale(f, f.neg(f.one()), poly_mul(f, q, u1)));
    auto v2 = poly_add(f, v0, poly_scale(f, f.neg(f.one()), poly_mul(f, q, v1)));
    u0 = std::move(u1);
    v0 = std::move(v1);
    u1 = std::move(u2);
    v1 = std::move(v2);
  }
  if (!a.is_zero()) {
    auto inv = f.inv(a.c.back());
    a = poly_scale(f, inv, a);
    u0 = poly_scale(f, inv, u0);
    v0 = poly_scale(f, inv, v0);
  }
  return {a, u0, v0};
}

template <FieldType F>
typename F::Elem poly_eval(const F& f, const Poly<F>& a, const typename F::Elem& x) {
  auto r = f.zero();
  for (std::size_t i = a.c.size(); i-- > 0;) r = f.add(f.mul(r, x), a.c[i]);
  return r;
}

template <FieldType F>
Poly<F> poly_derivative(const F& f, const Poly<F>& a) {
  Poly<F> r;
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    auto k = f.zero();
    for (std::size_t t = 0; t < i; ++t) k = f.add(k, f.one());
    r.c.push_back(f.mul(k, a.c[i]));
  }
  poly_trim(f, r);
  return r;
}

template <FieldType F>
std::string poly_str(const F& f, const Poly<F>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (i) s += " + ";
    s += "(" + f.str(a.c[i]) + ")t^" + std::to_string(i);
  }
  return s;
}

/// Exhaustive irreducibility by trial division over a finite field.
inline bool poly_irreducible(const FiniteField& f, const Poly<FiniteField>& a) {
  const int deg = a.degree();
  if (deg <= 0) return false;
  if (deg == 1) return true;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= f.q();
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly<FiniteField> g;
      g.c.assign(d + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g.c[i] = FiniteField::Elem(c % f.q());
        c /= f.q();
      }
      g.c[d] = f.one();
      if (poly_mod(f, a, g).is_zero()) return false;
    }
  }
  return true;
}

/// Lexicographically smallest monic irreducible of given degree over a finite
/// field, coefficients compared little-endian by canonical element encoding.
inline Poly<FiniteField> canonical_irreducible(const FiniteField& f, int degree) {
  if (degree < 1) fail(Errc::BadInput, "degree must be positive");
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= f.q();
  for (std::uint64_t step = 0; step < count; ++step) {
    Poly<FiniteField> g;
    g.c.assign(degree + 1, 0);
    std::uint64_t c = step;
    for (int i = degree; i-- > 0;) {
      g.c[i] = FiniteField::Elem(c % f.q());
      c /= f.q();
    }
    g.c[degree] = f.one();
    if (poly_irreducible(f, g)) return g;
  }
  fail(Errc::Internal, "no irreducible polynomial of requested degree");
}

/// Characteristic polynomial of a square matrix via Hessenberg reduction;
/// exact over any field, O(n^3). Returned monic, little-endian.
template <FieldType F>
Poly<F> charpoly(const F& f, Mat<F> M) {
  const int n = int(M.size());
  if (n == 0) return poly_from(f, Vec<F>{f.one()});
  // reduce to upper Hessenberg by similarity transforms
  for (int col = 0; col < n - 2; ++col) {
    int piv = -1;
    for (int r = col + 1; r < n; ++r)
      if (!f.is_zero(M[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != col + 1) {
      std::swap(M[piv], M[col + 1]);
      for (int r = 0; r < n; ++r) std::swap(M[r][piv], M[r][col + 1]);
    }
    auto inv = f.inv(M[col + 1][col]);
    for (int r = col + 2; r < n; ++r) {
      if (f.is_zero(M[r][col])) continue;
      auto c = f.mul(M[r][col], inv);
      auto nc = f.neg(c);
      for (int j = 0; j < n; ++j) M[r][j] = f.add(M[r][j], f.mul(nc, M[col + 1][j]));
      for (int j = 0; j < n; ++j) M[j][col + 1] = f.add(M[j][col + 1], f.mul(c, M[j][r]));
    }
  }
  // char polys of leading principal Hessenberg minors by recurrence
  std::vector<Poly<F>> p(n + 1);
  p[0] = poly_from(f, Vec<F>{f.one()});
  for (int k = 1; k <= n; ++k) {
    // p_k(t) = (t - M[k-1][k-1]) p_{k-1}(t) - sum_{i=1}^{k-1} M[k-1-i][k-1] *
    //          (prod_{j=1}^{i} M[k-j][k-j-1]) * p_{k-1-i}(t)
    Poly<F> tmono;
    tmono.c = {f.neg(M[k - 1][k - 1]), f.one()};
    Poly<F> acc = poly_mul(f, tmono, p[k - 1]);
    auto beta = f.one();
    for (int i = 1; i <= k - 1; ++i) {
      beta = f.mul(beta, M[k - i][k - i - 1]);
      if (f.is_zero(beta)) break;
      auto coef = f.mul(M[k - 1 - i][k - 1], beta);
      if (!f.is_zero(coef))
        acc = poly_add(f, acc, poly_scale(f, f.neg(coef), p[k - 1 - i]));
    }
    p[k] = std::move(acc);
  }
  return p[n];
}

}  // namespace algchain

#endif
