#ifndef ALGCHAIN_ORACLE_HPP
#define ALGCHAIN_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "algchain/invariants.hpp"
#include "algchain/structure.hpp"

namespace algchain {

struct OracleGuard {
  std::uint64_t max_subspaces = 5'000'000;
  int workers = 1;
};

/// Sum over k of the Gaussian binomial [n choose k]_q: the total number of
/// subspaces the enumeration must visit. Saturates instead of overflowing.
inline std::uint64_t subspace_count_estimate(int n, std::uint64_t q) {
  const std::uint64_t cap = ~std::uint64_t(0) / 4;
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    // [n choose k]_q = prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{i+1} - 1)
    long double approx = 1.0L;
    for (int i = 0; i < k; ++i) {
      long double num = std::pow((long double)q, n - i) - 1;
      long double den = std::pow((long double)q, i + 1) - 1;
      approx *= num / den;
    }
    if (approx > (long double)cap) return cap;
    total += (std::uint64_t)(approx + 0.5L);
    if (total > cap) return cap;
  }
  return total;
}

/// All multiplicatively closed subspaces of A, canonically deduplicated (the
/// echelon form is unique per subspace, so each is generated exactly once).
struct LatticeStore {
  int ambient = 0;
  std::vector<Subspace<FiniteField>> nodes;       // sorted by (dim, rows)
  std::vector<std::vector<int>> covers;           // maximal closed proper subspaces
  int top = -1;
  int bottom = -1;
  std::map<int, long long> count_by_dim;
};

namespace oracle_detail {

inline bool node_less(const Subspace<FiniteField>& a, const Subspace<FiniteField>& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.pivots != b.pivots) return a.pivots < b.pivots;
  return a.rows < b.rows;
}

/// Closure test with early exit, used inside the enumeration hot loop.
inline bool closed_under_products(const AlgebraTable<FiniteField>& A,
                                  const Subspace<FiniteField>& S) {
  const FiniteField& f = A.field;
  for (std::size_t a = 0; a < S.rows.size(); ++a)
    for (std::size_t b = 0; b < S.rows.size(); ++b) {
      auto w = multiply(A, S.rows[a], S.rows[b]);
      for (std::size_t r = 0; r < S.rows.size(); ++r) {
        const auto c = w[S.pivots[r]];
        if (c) {
          auto nc = f.neg(c);
          axpy(f, w, nc, S.rows[r]);
        }
      }
      if (!is_zero_vec(f, w)) return false;
    }
  return true;
}

/// Visit every RREF matrix with the given pivot columns, filling the free
/// entries in odometer order.
template <class Fn>
void enumerate_pivot_pattern(const AlgebraTable<FiniteField>& A, const std::vector<int>& pivots,
                             Fn&& visit) {
  const FiniteField& f = A.field;
  const int n = A.dim;
  const int r = int(pivots.size());
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  // free slots: (row a, column c) with c > pivots[a] and c not a pivot column
  std::vector<std::pair<int, int>> free_slots;
  for (int a = 0; a < r; ++a)
    for (int c = pivots[a] + 1; c < n; ++c)
      if (!is_pivot[c]) free_slots.emplace_back(a, c);
  Subspace<FiniteField> S;
  S.ambient = n;
  S.pivots = pivots;
  S.rows.assign(r, Vec<FiniteField>(n, 0));
  for (int a = 0; a < r; ++a) S.rows[a][pivots[a]] = 1;
  std::vector<FiniteField::Elem> digits(free_slots.size(), 0);
  for (;;) {
    visit(S);
    // advance odometer
    std::size_t pos = 0;
    while (pos < digits.size()) {
      digits[pos] = FiniteField::Elem((digits[pos] + 1) % f.q());
      S.rows[free_slots[pos].first][free_slots[pos].second] = digits[pos];
      if (digits[pos] != 0) break;
      ++pos;
    }
    if (pos == digits.size()) break;
  }
}

template <class Fn>
void for_each_pivot_set(int n, int r, Fn&& fn) {
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r == 0) {
    fn(idx);
    return;
  }
  for (;;) {
    fn(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace oracle_detail

/// Exhaustive enumeration of the closed subspaces, stratified by dimension
/// and pivot pattern. The pattern list is partitioned deterministically
/// across workers; the merged result is independent of the worker count.
inline LatticeStore enumerate_subalgebras(const AlgebraTable<FiniteField>& A,
                                          const OracleGuard& guard = {}) {
  const FiniteField& f = A.field;
  const int n = A.dim;
  auto estimate = subspace_count_estimate(n, f.q());
  if (estimate > guard.max_subspaces)
    fail(Errc::GuardExceeded, "estimated " + std::to_string(estimate) +
                                  " subspaces exceeds the guard of " +
                                  std::to_string(guard.max_subspaces));
  // collect all pivot sets across dimensions
  std::vector<std::vector<int>> patterns;
  for (int r = 0; r <= n; ++r)
    oracle_detail::for_each_pivot_set(n, r, [&](const std::vector<int>& pv) { patterns.push_back(pv); });

  const int workers = std::max(1, guard.workers);
  std::vector<std::vector<Subspace<FiniteField>>> found(workers);
  auto run = [&](int w) {
    for (std::size_t t = w; t < patterns.size(); t += workers)
      oracle_detail::enumerate_pivot_pattern(A, patterns[t], [&](const Subspace<FiniteField>& S) {
        if (oracle_detail::closed_under_products(A, S)) found[w].push_back(S);
      });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& th : threads) th.join();
  }

  LatticeStore store;
  store.ambient = n;
  for (auto& part : found)
    for (auto& s : part) store.nodes.push_back(std::move(s));
  std::sort(store.nodes.begin(), store.nodes.end(), oracle_detail::node_less);
  for (int i = 0; i < int(store.nodes.size()); ++i) {
    store.count_by_dim[store.nodes[i].dim()]++;
    if (store.nodes[i].dim() == 0) store.bottom = i;
    if (store.nodes[i].dim() == n) store.top = i;
  }
  if (store.top < 0 || store.bottom < 0) fail(Errc::Internal, "lattice misses top or bottom");

  // cover edges: for each node, the maximal closed subspaces strictly below
  store.covers.assign(store.nodes.size(), {});
  for (int v = 0; v < int(store.nodes.size()); ++v) {
    const auto& V = store.nodes[v];
    auto& cov = store.covers[v];
    for (int u = v - 1; u >= 0; --u) {
      const auto& U = store.nodes[u];
      if (U.dim() >= V.dim()) continue;
      if (!contains(f, V, U)) continue;
      bool inside_accepted = false;
      for (int c : cov)
        if (contains(f, store.nodes[c], U)) {
          inside_accepted = true;
          break;
        }
      if (!inside_accepted) cov.push_back(u);
    }
  }
  return store;
}

struct OracleResult {
  long long exact_length = 0;
  long long exact_depth = 0;
  long long max_subalgebra_count = 0;
  long long frattini_dim = 0;
  long long node_count = 0;
};

/// Longest and shortest maximal chains from the full algebra to zero, by
/// dynamic programming over the cover relation.
inline OracleResult exact_length_depth(const LatticeStore& store) {
  const int N = int(store.nodes.size());
  std::vector<long long> longest(N, 0), shortest(N, 0);
  for (int v = 0; v < N; ++v) {  // nodes sorted by dim: children precede parents
    if (v == store.bottom) continue;
    long long lo = -1, hi = -1;
    for (int u : store.covers[v]) {
      if (hi < 0 || longest[u] + 1 > hi) hi = longest[u] + 1;
      if (lo < 0 || shortest[u] + 1 < lo) lo = shortest[u] + 1;
    }
    if (hi < 0) fail(Errc::Internal, "nonzero node without a maximal subalgebra");
    longest[v] = hi;
    shortest[v] = lo;
  }
  OracleResult res;
  res.exact_length = longest[store.top];
  res.exact_depth = shortest[store.top];
  res.max_subalgebra_count = long(store.covers[store.top].size());
  res.node_count = N;
  // Frattini: intersection of all maximal subalgebras
  if (store.covers[store.top].empty()) {
    res.frattini_dim = store.nodes[store.top].dim();
  } else {
    // intersection computed on dimensions via the lattice: intersect carriers
    res.frattini_dim = -1;
  }
  return res;
}

inline OracleResult oracle_run(const AlgebraTable<FiniteField>& A, const OracleGuard& guard = {}) {
  auto store = enumerate_subalgebras(A, guard);
  auto res = exact_length_depth(store);
  // fill frattini dimension
  const FiniteField& f = A.field;
  auto acc = store.nodes[store.top];
  for (int c : store.covers[store.top]) acc = subspace_intersect(f, acc, store.nodes[c]);
  res.frattini_dim = acc.dim();
  return res;
}

/// All maximal subalgebras of A.
inline std::vector<Subspace<FiniteField>> maximal_subalgebras(const AlgebraTable<FiniteField>& A,
                                                              const OracleGuard& guard = {}) {
  auto store = enumerate_subalgebras(A, guard);
  std::vector<Subspace<FiniteField>> out;
  for (int c : store.covers[store.top]) out.push_back(store.nodes[c]);
  return out;
}

/// Intersection of all maximal subalgebras.
inline Subspace<FiniteField> frattini(const AlgebraTable<FiniteField>& A,
                                      const OracleGuard& guard = {}) {
  const FiniteField& f = A.field;
  auto maxes = maximal_subalgebras(A, guard);
  auto acc = full_subspace(f, A.dim);
  for (const auto& B : maxes) acc = subspace_intersect(f, acc, B);
  return acc;
}

struct MaximalClassification {
  int dim = 0;
  bool semisimple_type = false;  // J(A) contained in B
  std::string shape;             // matched classification clause
};

struct ClassifyReport {
  std::vector<MaximalClassification> maximals;
  bool simple_input = false;
  long long matrix_size_n = 0;      // n of A when simple
  long long largest_t_seen = 0;     // max matrix size over simple lattice nodes
  bool t_bound_ok = true;           // every simple subalgebra has t <= n
  long long semisimple_type_count = 0;
  long long quotient_maximal_count = -1;  // maximal subalgebras of A/J, when computed
};

/// Check every maximal subalgebra against the classification families, and
/// every simple node of the lattice against the matrix-size bound.
inline ClassifyReport classify_maximals_crosscheck(const AlgebraTable<FiniteField>& A,
                                                   const OracleGuard& guard = {}) {
  const FiniteField& f = A.field;
  ClassifyReport rep;
  auto store = enumerate_subalgebras(A, guard);
  auto W = wedderburn(A);
  rep.simple_input = (W.radical_dim == 0 && W.factors.size() == 1);
  if (rep.simple_input) rep.matrix_size_n = W.factors[0].n;

  const auto& J = W.radical;
  for (int c : store.covers[store.top]) {
    const auto& B = store.nodes[c];
    MaximalClassification mc;
    mc.dim = B.dim();
    mc.semisimple_type = contains(f, B, J);
    if (mc.semisimple_type) ++rep.semisimple_type_count;
    if (!mc.semisimple_type) {
      // split type: B must project onto all of A/J
      if (subspace_sum(f, B, J).dim() != A.dim)
        fail(Errc::ClassificationMismatch,
             "maximal subalgebra neither contains the radical nor projects onto A/J");
      mc.shape = "split";
    } else if (rep.simple_input) {
      auto [ind, embed] = induced_subalgebra(A, B);
      auto WB = wedderburn(ind);
      const auto& fA = W.factors[0];
      if (WB.radical_dim > 0) {
        // parabolic shape: two blocks M_a(D) x M_b(D) with a + b = n over the
        // same division algebra, radical of dimension a*b*[D:k]
        bool ok = WB.factors.size() == 2;
        if (ok) {
          auto a = WB.factors[0], b = WB.factors[1];
          ok = a.d == fA.d && b.d == fA.d && a.n + b.n == fA.n &&
               WB.radical_dim == 1LL * a.n * b.n * fA.d;
        }
        if (!ok)
          fail(Errc::ClassificationMismatch,
               "maximal subalgebra with a radical does not have the two-block parabolic shape");
        mc.shape = "parabolic";
      } else if (WB.factors.size() == 1) {
        // simple subalgebra: dim B divides dim A and the ratio matches a
        // center-degree quotient in one direction or the other
        const auto& fB = WB.factors[0];
        if (B.dim() == 0 || A.dim % B.dim() != 0)
          fail(Errc::ClassificationMismatch, "simple maximal subalgebra dimension does not divide");
        long long mratio = A.dim / B.dim();
        bool s2 = (fB.d % fA.d == 0) && (fB.d / fA.d == mratio);
        bool s3 = (fA.d % fB.d == 0) && (fA.d / fB.d == mratio) && (fA.n % fB.n == 0);
        if (!s2 && !s3)
          fail(Errc::ClassificationMismatch, "simple maximal subalgebra matches neither "
                                             "centralizer nor subfield-restriction shape");
        if (s2) {
          // verify B is the centralizer of its own center
          auto ZB = center(ind);
          Mat<FiniteField> zrows;
          for (const auto& zr : ZB.rows) {
            Vec<FiniteField> amb(A.dim, 0);
            for (int t = 0; t < ind.dim; ++t)
              if (zr[t]) axpy(f, amb, zr[t], B.rows[t]);
            zrows.push_back(std::move(amb));
          }
          auto Zamb = rref(f, zrows, A.dim);
          auto C = centralizer(A, Zamb);
          if (!(C.carrier == B))
            fail(Errc::ClassificationMismatch, "centralizer-shaped maximal is not self-consistent");
          mc.shape = "centralizer(" + std::to_string(fB.d) + ")";
        } else {
          mc.shape = "subfield-restriction(" + std::to_string(fB.d) + ")";
        }
      } else {
        fail(Errc::ClassificationMismatch, "semisimple maximal subalgebra with multiple factors "
                                           "inside a simple algebra");
      }
    } else {
      mc.shape = "semisimple-type";
    }
    rep.maximals.push_back(mc);
  }

  // 1-1 correspondence with maximal subalgebras of A/J for semisimple type
  if (W.radical_dim > 0 && W.quotient.dim > 0 &&
      subspace_count_estimate(W.quotient.dim, f.q()) <= guard.max_subspaces) {
    auto qstore = enumerate_subalgebras(W.quotient, guard);
    rep.quotient_maximal_count = long(qstore.covers[qstore.top].size());
    if (rep.quotient_maximal_count != rep.semisimple_type_count)
      fail(Errc::ClassificationMismatch,
           "semisimple-type maximal count does not match the quotient");
  }

  // matrix-size bound over every simple node of the lattice
  if (rep.simple_input) {
    for (const auto& node : store.nodes) {
      if (node.dim() == 0) continue;
      auto [ind, embed] = induced_subalgebra(A, node);
      if (!find_identity(ind)) continue;  // simple algebras are unital
      auto Wn = wedderburn(ind);
      if (Wn.radical_dim == 0 && Wn.factors.size() == 1) {
        rep.largest_t_seen = std::max(rep.largest_t_seen, (long long)Wn.factors[0].n);
        if (Wn.factors[0].n > rep.matrix_size_n) rep.t_bound_ok = false;
      }
    }
    if (!rep.t_bound_ok)
      fail(Errc::ClassificationMismatch, "a simple subalgebra exceeds the matrix size bound");
  }
  return rep;
}

struct LemmaSuiteReport {
  long long l_A = 0, lambda_A = 0;
  long long l_I = -1, l_Q = -1, lambda_Q = -1;
  bool additivity_ok = true;       // l(A) = l(I) + l(A/I)
  bool depth_step_ok = true;       // lambda(A) >= lambda(A/I) + 1 for nonzero I
  bool cd_superadditive_ok = true; // cd(A) >= cd(I) + cd(A/I)
  bool maximals_all_ideals = false;
  bool is_field_or_nilpotent = false;
  bool ideal_characterization_ok = true;
};

/// Exact oracle checks of the ideal-chain identities and of the
/// "every maximal subalgebra is an ideal" characterization.
inline LemmaSuiteReport lemma_suite(const AlgebraTable<FiniteField>& A,
                                    const std::optional<Subspace<FiniteField>>& ideal = {},
                                    const OracleGuard& guard = {}) {
  const FiniteField& f = A.field;
  LemmaSuiteReport rep;
  auto resA = oracle_run(A, guard);
  rep.l_A = resA.exact_length;
  rep.lambda_A = resA.exact_depth;

  if (ideal) {
    auto [Q, proj] = quotient_by_ideal(A, *ideal);  // validates the ideal
    long long lI = 0, lamI = 0;
    if (ideal->dim() > 0) {
      auto [indI, embedI] = induced_subalgebra(A, *ideal);
      auto resI = oracle_run(indI, guard);
      lI = resI.exact_length;
      lamI = resI.exact_depth;
    }
    auto resQ = Q.dim > 0 ? oracle_run(Q, guard) : OracleResult{};
    rep.l_I = lI;
    rep.l_Q = resQ.exact_length;
    rep.lambda_Q = resQ.exact_depth;
    rep.additivity_ok = (rep.l_A == lI + resQ.exact_length);
    if (ideal->dim() > 0) rep.depth_step_ok = (rep.lambda_A >= resQ.exact_depth + 1);
    rep.cd_superadditive_ok =
        (rep.l_A - rep.lambda_A) >= (lI - lamI) + (resQ.exact_length - resQ.exact_depth);
  }

  // every maximal subalgebra an ideal <=> A is the ground field or nilpotent
  auto maxes = maximal_subalgebras(A, guard);
  rep.maximals_all_ideals = true;
  for (const auto& B : maxes)
    if (!detail::is_two_sided_ideal(A, B)) {
      rep.maximals_all_ideals = false;
      break;
    }
  bool is_field_k = false;
  if (A.dim == 1) {
    auto e0 = unit_vec(f, 1, 0);
    is_field_k = !is_zero_vec(f, multiply(A, e0, e0));
  }
  rep.is_field_or_nilpotent = is_field_k || is_nilpotent(A).nilpotent;
  rep.ideal_characterization_ok = (rep.maximals_all_ideals == rep.is_field_or_nilpotent);
  return rep;
}

/// One subalgebra per line (dimension, basis rows), then the cover edges;
/// deterministic ordering.
inline std::string dump_lattice(const AlgebraTable<FiniteField>& A, const LatticeStore& store) {
  const FiniteField& f = A.field;
  std::string out;
  out += "nodes " + std::to_string(store.nodes.size()) + "\n";
  for (std::size_t i = 0; i < store.nodes.size(); ++i) {
    const auto& node = store.nodes[i];
    out += std::to_string(i) + " dim " + std::to_string(node.dim());
    for (const auto& row : node.rows) out += " [" + vec_str(f, row) + "]";
    out += "\n";
  }
  out += "covers\n";
  for (std::size_t i = 0; i < store.nodes.size(); ++i) {
    auto sorted = store.covers[i];
    std::sort(sorted.begin(), sorted.end());
    out += std::to_string(i) + ":";
    for (int c : sorted) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

}  // namespace algchain

#endif
