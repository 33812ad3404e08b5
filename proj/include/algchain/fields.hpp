#ifndef ALGCHAIN_FIELDS_HPP
#define ALGCHAIN_FIELDS_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "algchain/error.hpp"

namespace algchain {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { rational, finite };

/// Description of a supported ground field: the rationals, or GF(p^m) given by
/// a monic irreducible modulus over GF(p) (little-endian coefficients).
/// An empty modulus for m > 1 selects the canonical (lexicographically
/// smallest) irreducible polynomial.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> modulus;  // little-endian, length m+1 once resolved

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec finite(std::uint32_t p, std::uint32_t m = 1,
                          std::vector<std::uint32_t> modulus = {}) {
    FieldSpec s;
    s.kind = FieldKind::finite;
    s.p = p;
    s.m = m;
    s.modulus = std::move(modulus);
    return s;
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == FieldKind::rational) return true;
    return a.p == b.p && a.m == b.m && a.modulus == b.modulus;
  }
};

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

// Dense little-endian polynomials over GF(p) with word coefficients; only used
// while constructing field tables.
using PPoly = std::vector<std::uint32_t>;

inline void ppoly_trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly ppoly_mul(const PPoly& a, const PPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  ppoly_trim(r);
  return r;
}

inline PPoly ppoly_mod(PPoly a, const PPoly& m, std::uint32_t p) {
  ppoly_trim(a);
  const std::size_t dm = m.size() - 1;  // m monic
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        std::uint64_t sub = std::uint64_t(lead) * m[i] % p;
        std::uint32_t& c = a[shift + i];
        c = std::uint32_t((c + p - sub) % p);
      }
    }
    a.pop_back();
    ppoly_trim(a);
    if (a.size() <= dm) break;
  }
  ppoly_trim(a);
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool ppoly_irreducible(const PPoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    // enumerate monic divisor candidates of degree d
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PPoly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = std::uint32_t(c % p);
        c /= p;
      }
      g[d] = 1;
      if (ppoly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

inline PPoly canonical_irreducible_prime(std::uint32_t p, std::uint32_t m) {
  // Lexicographically smallest monic irreducible of degree m, coefficients
  // compared little-endian (c0 first).
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  std::vector<std::uint32_t> digits(m, 0);
  for (std::uint64_t step = 0; step < count; ++step) {
    PPoly f(m + 1, 0);
    // digits enumerated such that c0 is most significant in the ordering
    std::uint64_t c = step;
    for (std::uint32_t i = m; i-- > 0;) {
      digits[i] = std::uint32_t(c % p);
      c /= p;
    }
    for (std::uint32_t i = 0; i < m; ++i) f[i] = digits[i];
    f[m] = 1;
    if (ppoly_irreducible(f, p)) return f;
  }
  fail(Errc::Internal, "no irreducible polynomial found");
}

}  // namespace detail

/// GF(p^m) with p^m <= 2^16. Elements are encoded as sum c_i * p^i for the
/// residue polynomial sum c_i x^i; the encoding is the canonical form.
/// Arithmetic uses discrete-log tables built once per field; the handle is a
/// cheap shared pointer and immutable after construction.
class FiniteField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  explicit FiniteField(const FieldSpec& spec) {
    if (spec.kind != FieldKind::finite) fail(Errc::BadInput, "finite field spec required");
    if (!is_prime_u32(spec.p)) fail(Errc::CompositeP, "p = " + std::to_string(spec.p) + " is not prime");
    if (spec.m < 1) fail(Errc::DegreeMismatch, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < spec.m; ++i) {
      q *= spec.p;
      if (q > kMaxOrder) fail(Errc::ValidationError, "field order p^m exceeds 2^16");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = spec.p;
    impl->m = spec.m;
    impl->q = std::uint32_t(q);
    if (spec.m == 1) {
      if (!spec.modulus.empty()) {
        // allow the trivial modulus [c,1] only when it matches x - 0 form? No:
        // a prime field carries no modulus.
        fail(Errc::DegreeMismatch, "prime field takes no modulus");
      }
      impl->modulus = {0, 1};
    } else if (spec.modulus.empty()) {
      impl->modulus = detail::canonical_irreducible_prime(spec.p, spec.m);
    } else {
      detail::PPoly f = spec.modulus;
      detail::ppoly_trim(f);
      if (f.size() != spec.m + 1 || f.back() != 1)
        fail(Errc::DegreeMismatch, "modulus must be monic of degree m");
      for (auto c : f)
        if (c >= spec.p) fail(Errc::DegreeMismatch, "modulus coefficient out of range");
      if (!detail::ppoly_irreducible(f, spec.p))
        fail(Errc::ReducibleModulus, "modulus is reducible over GF(p)");
      impl->modulus = f;
    }
    impl->build_tables();
    impl_ = std::move(impl);
  }

  FieldSpec spec() const {
    FieldSpec s = FieldSpec::finite(impl_->p, impl_->m);
    if (impl_->m > 1)
      s.modulus.assign(impl_->modulus.begin(), impl_->modulus.end());
    return s;
  }

  std::uint32_t p() const { return impl_->p; }
  std::uint32_t m() const { return impl_->m; }
  std::uint32_t q() const { return impl_->q; }
  std::uint32_t characteristic() const { return impl_->p; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Residue class of x for m > 1; the identity for prime fields.
  Elem generator() const { return impl_->m > 1 ? impl_->p : 1; }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    const auto& I = *impl_;
    if (I.p == 2) return a ^ b;
    Elem r = 0, pw = 1;
    for (std::uint32_t i = 0; i < I.m; ++i) {
      std::uint32_t da = (a / I.ppow[i]) % I.p, db = (b / I.ppow[i]) % I.p;
      r += ((da + db) % I.p) * pw;
      pw *= I.p;
    }
    return r;
  }

  Elem neg(Elem a) const {
    const auto& I = *impl_;
    if (I.p == 2) return a;
    Elem r = 0;
    for (std::uint32_t i = 0; i < I.m; ++i) {
      std::uint32_t d = (a / I.ppow[i]) % I.p;
      r += ((I.p - d) % I.p) * I.ppow[i];
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    const auto& I = *impl_;
    return I.exp[(I.log[a] + I.log[b]) % (I.q - 1)];
  }

  Elem inv(Elem a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    const auto& I = *impl_;
    return I.exp[(I.q - 1 - I.log[a]) % (I.q - 1)];
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const auto& I = *impl_;
    std::uint64_t le = (std::uint64_t(I.log[a]) * (e % (I.q - 1))) % (I.q - 1);
    return I.exp[le];
  }

  /// a^(p^j): the j-th power of the Frobenius automorphism.
  Elem frobenius(Elem a, std::uint32_t j) const {
    std::uint64_t e = 1;
    const auto& I = *impl_;
    for (std::uint32_t i = 0; i < j % I.m; ++i) e = e * I.p % (I.q - 1 == 0 ? 1 : (I.q - 1));
    if (I.q == 2) return a;
    return pow(a, e == 0 ? 1 : e);
  }

  /// Inverse Frobenius: the unique b with b^(p^j) = a.
  Elem frobenius_inv(Elem a, std::uint32_t j) const {
    const auto& I = *impl_;
    return frobenius(a, (I.m - j % I.m) % I.m);
  }

  std::uint64_t multiplicative_order(Elem a) const {
    if (a == 0) fail(Errc::DivisionByZero, "order of zero");
    const std::uint64_t n = impl_->q - 1;
    std::uint64_t ord = n;
    std::uint64_t rest = n;
    for (std::uint64_t d = 2; d * d <= rest; ++d)
      if (rest % d == 0) {
        while (ord % d == 0 && pow(a, ord / d) == 1) ord /= d;
        while (rest % d == 0) rest /= d;
      }
    if (rest > 1)
      while (ord % rest == 0 && pow(a, ord / rest) == 1) ord /= rest;
    return ord == 0 ? 1 : ord;
  }

  /// Digits of the canonical encoding, little-endian, length m.
  std::vector<std::uint32_t> digits(Elem a) const {
    const auto& I = *impl_;
    std::vector<std::uint32_t> d(I.m);
    for (std::uint32_t i = 0; i < I.m; ++i) d[i] = (a / I.ppow[i]) % I.p;
    return d;
  }

  Elem from_digits(const std::vector<std::uint32_t>& d) const {
    const auto& I = *impl_;
    if (d.size() > I.m) {
      for (std::size_t i = I.m; i < d.size(); ++i)
        if (d[i] != 0) fail(Errc::BadInput, "coefficient list longer than extension degree");
    }
    Elem a = 0;
    for (std::uint32_t i = 0; i < I.m && i < d.size(); ++i) {
      if (d[i] >= I.p) fail(Errc::BadInput, "digit out of range");
      a += d[i] * I.ppow[i];
    }
    return a;
  }

  /// Canonical ring map from the integers (n mod p, times the identity).
  Elem from_int(long long n) const {
    long long r = n % impl_->p;
    if (r < 0) r += impl_->p;
    return Elem(r);
  }

  std::string str(Elem a) const {
    const auto& I = *impl_;
    if (I.m == 1) return std::to_string(a);
    auto d = digits(a);
    std::string s;
    for (std::uint32_t i = 0; i < I.m; ++i) {
      if (i) s += ':';
      s += std::to_string(d[i]);
    }
    return s;
  }

  Elem parse(const std::string& text) const {
    const auto& I = *impl_;
    if (text.find(':') != std::string::npos) {
      std::vector<std::uint32_t> d;
      std::stringstream ss(text);
      std::string part;
      while (std::getline(ss, part, ':')) {
        try {
          d.push_back(std::uint32_t(std::stoul(part)));
        } catch (...) {
          fail(Errc::ParseError, "bad scalar literal '" + text + "'");
        }
      }
      return from_digits(d);
    }
    try {
      std::size_t pos = 0;
      long long v = std::stoll(text, &pos);
      if (pos != text.size()) fail(Errc::ParseError, "bad scalar literal '" + text + "'");
      return from_int(v);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::ParseError, "bad scalar literal '" + text + "'");
    }
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.spec() == b.spec();
  }

 private:
  struct Impl {
    std::uint32_t p = 0, m = 0, q = 0;
    detail::PPoly modulus;
    std::vector<std::uint32_t> ppow;  // p^i strides
    std::vector<Elem> exp;            // exp[i] = g^i, size q-1
    std::vector<std::uint32_t> log;   // log[a] for a != 0

    Elem encode(const detail::PPoly& f) const {
      Elem a = 0;
      for (std::size_t i = 0; i < f.size(); ++i) a += f[i] * ppow[i];
      return a;
    }
    detail::PPoly decode(Elem a) const {
      detail::PPoly f(m);
      for (std::uint32_t i = 0; i < m; ++i) f[i] = (a / ppow[i]) % p;
      detail::ppoly_trim(f);
      return f;
    }
    Elem slow_mul(Elem a, Elem b) const {
      auto r = detail::ppoly_mod(detail::ppoly_mul(decode(a), decode(b), p), modulus, p);
      return encode(r);
    }

    void build_tables() {
      ppow.resize(m + 1);
      ppow[0] = 1;
      for (std::uint32_t i = 1; i <= m; ++i) ppow[i] = ppow[i - 1] * p;
      const std::uint32_t n = q - 1;
      // factor q-1
      std::vector<std::uint32_t> primes;
      {
        std::uint32_t x = n;
        for (std::uint32_t d = 2; std::uint64_t(d) * d <= x; ++d)
          if (x % d == 0) {
            primes.push_back(d);
            while (x % d == 0) x /= d;
          }
        if (x > 1) primes.push_back(x);
      }
      Elem g = 0;
      for (Elem cand = 1; cand < q; ++cand) {
        bool primitive = true;
        for (auto ell : primes) {
          Elem t = 1;
          std::uint32_t e = n / ell;
          Elem base = cand;
          while (e) {
            if (e & 1) t = slow_mul(t, base);
            base = slow_mul(base, base);
            e >>= 1;
          }
          if (t == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) {
          g = cand;
          break;
        }
      }
      if (g == 0 && q > 2) fail(Errc::Internal, "no primitive element found");
      if (q == 2) g = 1;
      exp.resize(n == 0 ? 1 : n);
      log.assign(q, 0);
      Elem cur = 1;
      for (std::uint32_t i = 0; i < (n == 0 ? 1u : n); ++i) {
        exp[i] = cur;
        log[cur] = i;
        cur = slow_mul(cur, g);
      }
    }
  };

  std::shared_ptr<const Impl> impl_;
};

/// The rationals with arbitrary-precision exact arithmetic.
class RationalField {
 public:
  using Elem = Rational;

  RationalField() = default;
  explicit RationalField(const FieldSpec& spec) {
    if (spec.kind != FieldKind::rational) fail(Errc::BadInput, "rational field spec required");
  }

  FieldSpec spec() const { return FieldSpec::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem generator() const { return Elem(1); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem from_int(long long n) const { return Elem(n); }

  std::string str(const Elem& a) const {
    std::ostringstream os;
    os << a;
    return os.str();
  }

  Elem parse(const std::string& text) const {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Elem(BigInt(text));
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) fail(Errc::ParseError, "zero denominator in '" + text + "'");
      return Elem(num, den);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::ParseError, "bad scalar literal '" + text + "'");
    }
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept FieldType = requires(const F f, typename F::Elem a) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.eq(a, a) } -> std::convertible_to<bool>;
};

inline std::string field_spec_str(const FieldSpec& s) {
  if (s.kind == FieldKind::rational) return "rational";
  std::string out = "finite p=" + std::to_string(s.p) + " m=" + std::to_string(s.m);
  if (s.m > 1 && !s.modulus.empty()) {
    out += " modulus=";
    for (std::size_t i = 0; i < s.modulus.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(s.modulus[i]);
    }
  }
  return out;
}

}  // namespace algchain

#endif
