#ifndef ALGCHAIN_INVARIANTS_HPP
#define ALGCHAIN_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "algchain/error.hpp"
#include "algchain/structure.hpp"

namespace algchain {

enum class FieldClass {
  finite,
  rational,
  algebraically_closed_symbolic,
  quadratically_closed_symbolic,
};

inline const char* field_class_name(FieldClass c) {
  switch (c) {
    case FieldClass::finite: return "finite";
    case FieldClass::rational: return "rational";
    case FieldClass::algebraically_closed_symbolic: return "algebraically_closed_symbolic";
    case FieldClass::quadratically_closed_symbolic: return "quadratically_closed_symbolic";
  }
  return "?";
}

/// Number of prime divisors counted with multiplicity.
inline long long omega(long long n) {
  if (n < 1) fail(Errc::NonPositive, "omega requires n >= 1");
  long long count = 0;
  for (long long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  if (n > 1) ++count;
  return count;
}

inline long long floor_log2(long long n) {
  if (n < 1) fail(Errc::NonPositive, "log of non-positive value");
  long long a = 0;
  while ((1LL << (a + 1)) <= n) ++a;
  return a;
}

/// Smallest integer >= log2(n).
inline long long ceil_log2(long long n) {
  if (n < 1) fail(Errc::NonPositive, "log of non-positive value");
  long long a = 0;
  while ((1LL << a) < n) ++a;
  return a;
}

/// Smallest integer >= 3*log2(n), exact: least s with 2^s >= n^3.
inline long long ceil_3log2(long long n) {
  if (n < 1) fail(Errc::NonPositive, "log of non-positive value");
  unsigned __int128 cube = (unsigned __int128)n * n * n;
  long long s = 0;
  while (((unsigned __int128)1 << s) < cube) ++s;
  return s;
}

/// Lexicographically smallest prime triple p1 <= p2 <= p3 with sum n.
inline std::tuple<long long, long long, long long> goldbach_triple(long long n) {
  if (n < 7 || n % 2 == 0) fail(Errc::BadInput, "goldbach triple requires odd n >= 7");
  std::vector<bool> composite(std::size_t(n + 1), false);
  for (long long i = 2; i * i <= n; ++i)
    if (!composite[i])
      for (long long j = i * i; j <= n; j += i) composite[j] = true;
  auto is_prime = [&](long long x) { return x >= 2 && !composite[std::size_t(x)]; };
  for (long long p1 = 2; 3 * p1 <= n; ++p1) {
    if (!is_prime(p1)) continue;
    for (long long p2 = p1; p1 + 2 * p2 <= n; ++p2) {
      if (!is_prime(p2)) continue;
      long long p3 = n - p1 - p2;
      if (p3 >= p2 && is_prime(p3)) return {p1, p2, p3};
    }
  }
  fail(Errc::Internal, "no prime triple found");
}

/// Chain-length cost of the halving descent from M_n to M_1: 3 per even step,
/// 6 per odd step (which first peels one row/column, then halves).
inline long long halving_cost(long long n) {
  if (n < 1) fail(Errc::NonPositive, "halving cost requires n >= 1");
  long long cost = 0;
  while (n > 1) {
    if (n % 2 == 0) {
      cost += 3;
      n /= 2;
    } else {
      cost += 6;
      n = (n - 1) / 2;
    }
  }
  return cost;
}

/// Shape of one simple factor M_n(D): d = [Z(D):k], e^2 = [D:Z(D)].
struct FactorShape {
  int n = 1;
  int d = 1;
  int e = 1;

  long long division_dim() const { return 1LL * d * e * e; }  // [D:k]
  long long block_dim() const { return 1LL * n * n * division_dim(); }
  bool commutative() const { return e == 1; }
};

/// Field-agnostic input to the invariant formulas.
struct InvariantInput {
  long long dim = 0;
  long long radical_dim = 0;
  std::vector<FactorShape> factors;  // canonical order (n, d, e) descending
};

/// Per-factor overrides for division algebras the formulas cannot resolve
/// (noncommutative D). Keyed by factor index in canonical order.
struct DivisionLengthHint {
  long long l_D = 0;
  long long lambda_D = 0;
};
using DivisionHints = std::map<int, DivisionLengthHint>;

template <FieldType F>
InvariantInput invariant_input(const AlgebraTable<F>& A, const WedderburnReport<F>& rep) {
  require_resolved(rep);
  InvariantInput in;
  in.dim = A.dim;
  in.radical_dim = rep.radical_dim;
  for (const auto& fac : rep.factors) in.factors.push_back({fac.n, fac.d, fac.e});
  return in;
}

namespace detail {

/// l(D) for a factor: Omega(d)+1 for commutative D (cyclic, hence solvable,
/// Galois group), otherwise from the hints.
inline long long division_length(const FactorShape& s, const DivisionHints& hints, int index) {
  if (s.commutative()) return omega(s.d) + 1;
  auto it = hints.find(index);
  if (it == hints.end())
    fail(Errc::MissingDivisionHint,
         "factor " + std::to_string(index) + " has a noncommutative division algebra");
  if (it->second.l_D < it->second.lambda_D || it->second.lambda_D < 1)
    fail(Errc::BadInput, "division hint must satisfy l >= lambda >= 1");
  return it->second.l_D;
}

inline long long division_depth(const FactorShape& s, const DivisionHints& hints, int index) {
  if (s.commutative()) return omega(s.d) + 1;
  auto it = hints.find(index);
  if (it == hints.end())
    fail(Errc::MissingDivisionHint,
         "factor " + std::to_string(index) + " has a noncommutative division algebra");
  return it->second.lambda_D;
}

}  // namespace detail

/// l(A) = dim J(A) + sum over factors of n-1 + n(n-1)[D:k]/2 + n*l(D).
inline long long length_formula(const InvariantInput& in, const DivisionHints& hints = {}) {
  long long total = in.radical_dim;
  for (int i = 0; i < int(in.factors.size()); ++i) {
    const auto& s = in.factors[i];
    long long dk = s.division_dim();
    total += s.n - 1 + 1LL * s.n * (s.n - 1) * dk / 2 + s.n * detail::division_length(s, hints, i);
  }
  return total;
}

struct ParabolicLength {
  long long rank = 0;          // r = sum (n_i - 1)
  long long borel_length = 0;  // l(B)
  long long total = 0;         // dim J + l(B) + r
};

inline ParabolicLength parabolic_length(const InvariantInput& in, const DivisionHints& hints = {}) {
  ParabolicLength out;
  for (int i = 0; i < int(in.factors.size()); ++i) {
    const auto& s = in.factors[i];
    out.rank += s.n - 1;
    out.borel_length +=
        1LL * s.n * (s.n - 1) * s.division_dim() / 2 + s.n * detail::division_length(s, hints, i);
  }
  out.total = in.radical_dim + out.borel_length + out.rank;
  return out;
}

struct DepthBounds {
  long long lower = 0;
  long long upper = 0;
};

/// Sound interval for the depth. Per-factor upper bounds are combined by
/// sub-additivity plus one step per radical dimension; the lower bound is the
/// best per-factor bound plus m - delta with delta = 1 iff the algebra is
/// semisimple. Nilpotent algebras have depth exactly equal to the dimension.
inline DepthBounds depth_bounds(const InvariantInput& in, FieldClass fc,
                                const DivisionHints& hints = {}) {
  if (in.dim == 0) return {0, 0};
  if (in.factors.empty()) return {in.radical_dim, in.radical_dim};  // nilpotent
  long long upper = 0;
  long long best_lower = 0;
  const long long m = (long long)in.factors.size();
  for (int i = 0; i < int(in.factors.size()); ++i) {
    const auto& s = in.factors[i];
    const long long lam_D = detail::division_depth(s, hints, i);
    const long long a = floor_log2(s.n);
    long long up = 6 * a + lam_D;  // generic recursion bound
    switch (fc) {
      case FieldClass::finite:
        up = std::min(up, lam_D + std::min<long long>(2 * omega(s.n), 15));
        up = std::min(up, 2 * omega(s.n) + omega(1LL * s.d * s.e * s.e) + 1);
        break;
      case FieldClass::rational:
        up = std::min(up, lam_D + std::min<long long>(2 * omega(s.n), 15));
        if (s.d == 1 && s.e == 1) up = std::min(up, 2 * omega(s.n) + 1);
        break;
      case FieldClass::algebraically_closed_symbolic:
        if (s.d != 1 || s.e != 1)
          fail(Errc::BadInput, "algebraically closed symbolic factors must be split");
        break;
      case FieldClass::quadratically_closed_symbolic:
        if (s.division_dim() > 4)
          fail(Errc::BadInput, "division dimension exceeds 4 with [closure:k] = 2");
        break;
    }
    upper += up;

    long long low = s.block_dim() > 1 ? 2 : 1;
    if (fc == FieldClass::algebraically_closed_symbolic) low = ceil_3log2(s.n) + 1;
    if (fc == FieldClass::quadratically_closed_symbolic) low = ceil_log2(s.block_dim()) + 1;
    best_lower = std::max(best_lower, low);
  }
  upper += in.radical_dim;
  const long long delta = in.radical_dim == 0 ? 1 : 0;
  long long lower = best_lower + m - delta;
  if (lower < 1) lower = 1;
  return {lower, upper};
}

struct CdBounds {
  long long lower = 0;
  long long upper = 0;
};

inline CdBounds cd_bounds(long long length, long long depth_lower, long long depth_upper) {
  if (length < depth_upper)
    fail(Errc::InconsistentBounds, "length below the depth upper bound");
  if (depth_lower > depth_upper)
    fail(Errc::InconsistentBounds, "depth interval is empty");
  return {length - depth_upper, length - depth_lower};
}

/// n <= sqrt(2 cd + 18) across the whole cd interval (exact integers).
inline bool matrix_dim_bound_ok(long long n, const CdBounds& cd) {
  return n * n <= 2 * cd.lower + 18 && n * n <= 2 * cd.upper + 18;
}

struct ConditionStarResult {
  bool holds = false;
  std::vector<std::string> reasons;
};

/// The structural precondition for chain difference zero, decided over a
/// finite ground field (embeddability of GF(q^a) into GF(q^b) is a | b; a
/// quadratic extension always exists).
inline ConditionStarResult condition_star(const InvariantInput& in) {
  ConditionStarResult out;
  out.holds = true;
  int delta = 0;
  for (const auto& s : in.factors) {
    if (s.n == 1) continue;
    if (s.n == 2 && s.d == 1 && s.e == 1) {
      ++delta;
      continue;
    }
    out.holds = false;
    out.reasons.push_back("factor M_" + std::to_string(s.n) + " with center degree " +
                          std::to_string(s.d) + " is neither a division algebra nor M_2(k)");
  }
  if (delta >= 1 && out.holds) {
    out.holds = false;
    out.reasons.push_back(delta > 1
                              ? "more than one M_2(k) factor"
                              : "an M_2(k) factor requires that no quadratic extension of k "
                                "exists, but finite fields always have one");
  }
  if (out.holds) {
    out.reasons.push_back("division factors over a finite field are cyclic extensions, so their "
                          "chain difference is zero");
    for (std::size_t i = 0; i < in.factors.size() && out.holds; ++i)
      for (std::size_t j = i + 1; j < in.factors.size(); ++j) {
        long long g = std::gcd((long long)in.factors[i].d, (long long)in.factors[j].d);
        if (g > 1) {
          out.holds = false;
          out.reasons.push_back("GF(q^" + std::to_string(g) + ") embeds in two distinct factors");
          break;
        }
      }
  }
  if (out.holds) out.reasons.push_back("unique-embedding check passed (pairwise coprime degrees)");
  return out;
}

/// Whether the quotient shape forces l(A) = dim A: every factor is k, M_2(k),
/// or a quadratic field extension of k.
inline bool predicts_length_equals_dim(const InvariantInput& in) {
  for (const auto& s : in.factors) {
    bool ok = (s.n == 1 && s.d == 1 && s.e == 1) || (s.n == 2 && s.d == 1 && s.e == 1) ||
              (s.n == 1 && s.d == 2 && s.e == 1);
    if (!ok) return false;
  }
  return true;
}

/// l(M_n(D)) >= dim/2 for a commutative (solvable Galois) division factor,
/// from the identity l - dim/2 = n(2 + Omega(d) - d/2) - 1.
inline bool half_length_check(long long n, long long d) {
  if (n < 1 || d < 1) fail(Errc::BadDegree, "half-length check requires n, d >= 1");
  // times 2: 2n(2 + Omega(d)) - n d - 2 >= 0
  return 2 * n * (2 + omega(d)) - n * d - 2 >= 0;
}

struct SolvableBoundResult {
  bool ok = false;
  bool exempt = false;  // only possible when no quadratic extension of k exists
  long long dim_quotient = 0;
  long long cd_used = 0;
};

/// dim A/R(A) <= 9 cd(A), checked with the exact chain difference when the
/// oracle supplied one and conservatively with cd_lower otherwise. Over
/// finite fields the exemption clause can never fire.
inline SolvableBoundResult solvable_bound_check(long long dim_quotient_by_R, long long cd_value,
                                                bool quadratic_extension_exists) {
  SolvableBoundResult out;
  out.dim_quotient = dim_quotient_by_R;
  out.cd_used = cd_value;
  out.ok = dim_quotient_by_R <= 9 * cd_value;
  out.exempt = false;
  if (!out.ok && !quadratic_extension_exists && dim_quotient_by_R == 4) {
    // A/R isomorphic to M_2(k) over a field with no quadratic extension
    out.exempt = true;
  }
  return out;
}

/// Full report of the formula-level invariants for one algebra.
struct InvariantReport {
  long long dim = 0;
  FieldClass field_class = FieldClass::finite;
  long long length = 0;
  long long rank = 0;
  long long borel_length = 0;
  long long parabolic_total = 0;
  DepthBounds depth;
  std::optional<long long> depth_exact;
  CdBounds cd;
  std::optional<bool> length_equals_dim;      // formula == dim, cross-checked
  std::optional<bool> satisfies_condition_star;
  std::optional<bool> half_length_holds;      // simple algebras only
  std::optional<bool> solvrad_ok;
  std::optional<bool> cd_matrix_bound_ok;     // simple algebras only
};

inline InvariantReport assemble_invariants(const InvariantInput& in, FieldClass fc,
                                           const DivisionHints& hints = {}) {
  InvariantReport rep;
  rep.dim = in.dim;
  rep.field_class = fc;
  rep.length = length_formula(in, hints);
  auto par = parabolic_length(in, hints);
  if (par.total != rep.length) fail(Errc::Internal, "parabolic length disagrees with the formula");
  rep.rank = par.rank;
  rep.borel_length = par.borel_length;
  rep.parabolic_total = par.total;
  rep.depth = depth_bounds(in, fc, hints);
  rep.cd = cd_bounds(rep.length, rep.depth.lower, rep.depth.upper);
  bool family = predicts_length_equals_dim(in);
  if ((rep.length == in.dim) != family)
    fail(Errc::Internal, "length-equals-dim family prediction disagrees with the formula");
  rep.length_equals_dim = rep.length == in.dim;
  if (fc == FieldClass::finite) rep.satisfies_condition_star = condition_star(in).holds;
  if (in.radical_dim == 0 && in.factors.size() == 1) {
    const auto& s = in.factors[0];
    if (s.commutative()) rep.half_length_holds = half_length_check(s.n, s.d);
    rep.cd_matrix_bound_ok = matrix_dim_bound_ok(s.n, rep.cd);
  }
  return rep;
}

}  // namespace algchain

#endif
