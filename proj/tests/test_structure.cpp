#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "algchain/structure.hpp"

using namespace algchain;

namespace {
const FiniteField F2{FieldSpec::finite(2)};
const FiniteField F3{FieldSpec::finite(3)};
const FiniteField F4{FieldSpec::finite(2, 2)};
const RationalField QQ;

template <FieldType F>
std::vector<std::tuple<int, int, int>> factor_shapes(const WedderburnReport<F>& rep) {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& fac : rep.factors) out.emplace_back(fac.n, fac.d, fac.e);
  return out;
}
}  // namespace

TEST_CASE("radical of upper triangular algebras") {
  auto T2 = make_upper_triangular(F2, 2);
  auto R = radical(T2);
  REQUIRE(R.dim() == 1);
  REQUIRE(member(F2, R, unit_vec(F2, 3, 1)));  // span{E12}

  auto T3 = make_upper_triangular(F2, 3);
  REQUIRE(radical(T3).dim() == 3);
  auto T3q = make_upper_triangular(F3, 3);
  REQUIRE(radical(T3q).dim() == 3);
  auto T2f4 = make_upper_triangular(F4, 2);
  REQUIRE(radical(T2f4).dim() == 1);
}

TEST_CASE("radical of simple and semisimple algebras is zero") {
  REQUIRE(radical(make_matrix_algebra(F3, 2)).dim() == 0);
  REQUIRE(radical(make_matrix_algebra(F2, 2)).dim() == 0);
  REQUIRE(radical(make_matrix_algebra(F2, 2, 2)).dim() == 0);  // M2(GF(4)) over GF(2)
  REQUIRE(radical(make_field_extension(F2, 4)).dim() == 0);
  auto kk = direct_product(make_field_extension(F2, 2), make_field_extension(F2, 3));
  REQUIRE(radical(kk).dim() == 0);
}

TEST_CASE("radical of truncated polynomial algebra") {
  // GF(2)[x]/(x^3): radical is span{x, x^2}
  auto A = make_truncated_quiver(F2, 1, {{0, 0}}, 3);
  auto R = radical(A);
  REQUIRE(R.dim() == 2);
  REQUIRE(member(F2, R, unit_vec(F2, 3, 1)));
  REQUIRE(member(F2, R, unit_vec(F2, 3, 2)));
}

TEST_CASE("radical of nilpotent algebras is everything") {
  auto U3 = make_strict_upper(F2, 3);
  REQUIRE(radical(U3).dim() == 3);
  auto nil = algebra_from_table(F2, 1, {});
  REQUIRE(radical(nil).dim() == 1);
}

TEST_CASE("radical over the rationals") {
  auto T2 = make_upper_triangular(QQ, 2);
  REQUIRE(radical(T2).dim() == 1);
  REQUIRE(radical(make_matrix_algebra(QQ, 3)).dim() == 0);
  auto nil = algebra_from_table(QQ, 1, {});
  REQUIRE(radical(nil).dim() == 1);
}

TEST_CASE("nilpotency checks") {
  auto U3 = make_strict_upper(F2, 3);
  auto info = is_nilpotent(U3);
  REQUIRE(info.nilpotent);
  REQUIRE(info.index == 3);
  auto k = algebra_from_table(F2, 1, {{0, 0, 0, FiniteField::Elem(1)}});
  REQUIRE(!is_nilpotent(k).nilpotent);
  REQUIRE(is_nilpotent(make_zero_algebra(F2)).nilpotent);
  REQUIRE(is_nilpotent(make_zero_algebra(F2)).index == 1);
}

TEST_CASE("centers") {
  auto M2 = make_matrix_algebra(F2, 2);
  auto Z = center(M2);
  REQUIRE(Z.dim() == 1);
  Vec<FiniteField> I = {1, 0, 0, 1};
  REQUIRE(member(F2, Z, I));

  REQUIRE(center(make_field_extension(F2, 2)).dim() == 2);

  auto prod = direct_product(make_matrix_algebra(F2, 2),
                             algebra_from_table(F2, 1, {{0, 0, 0, FiniteField::Elem(1)}}));
  REQUIRE(center(prod).dim() == 2);
}

TEST_CASE("wedderburn on finite-field algebras") {
  // GF(4) as GF(2)-algebra: one factor (1,2,1)
  auto A = make_field_extension(F2, 2);
  auto rep = wedderburn(A);
  REQUIRE(rep.radical_dim == 0);
  REQUIRE(factor_shapes(rep) == std::vector<std::tuple<int, int, int>>{{1, 2, 1}});

  // T3(GF(2)): radical dim 3, three split factors
  auto T3 = make_upper_triangular(F2, 3);
  auto rep3 = wedderburn(T3);
  REQUIRE(rep3.radical_dim == 3);
  REQUIRE(factor_shapes(rep3) ==
          std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});

  // M2(GF(3)): one factor (2,1,1)
  auto rep2 = wedderburn(make_matrix_algebra(F3, 2));
  REQUIRE(rep2.radical_dim == 0);
  REQUIRE(factor_shapes(rep2) == std::vector<std::tuple<int, int, int>>{{2, 1, 1}});

  // M2(GF(4)) over GF(2): one factor (2,2,1), dim 8 accounted
  auto rep4 = wedderburn(make_matrix_algebra(F2, 2, 2));
  REQUIRE(factor_shapes(rep4) == std::vector<std::tuple<int, int, int>>{{2, 2, 1}});

  // GF(4) x GF(8): two division factors with coprime degrees
  auto prod = direct_product(make_field_extension(F2, 2), make_field_extension(F2, 3));
  auto repp = wedderburn(prod);
  REQUIRE(factor_shapes(repp) == std::vector<std::tuple<int, int, int>>{{1, 3, 1}, {1, 2, 1}});

  // mixed: M2(GF(2)) x GF(4)
  auto mixed = direct_product(make_matrix_algebra(F2, 2), make_field_extension(F2, 2));
  auto repm = wedderburn(mixed);
  REQUIRE(factor_shapes(repm) == std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {1, 2, 1}});
}

TEST_CASE("wedderburn dimension accounting across a catalog") {
  std::vector<AlgebraTable<FiniteField>> algebras;
  algebras.push_back(make_matrix_algebra(F2, 2));
  algebras.push_back(make_upper_triangular(F3, 2));
  algebras.push_back(make_parabolic(F2, 3, Partition{{2, 1}}));
  algebras.push_back(make_truncated_quiver(F2, 2, {{0, 1}, {1, 0}}, 3));
  algebras.push_back(make_field_extension(F4, 2));  // GF(16) over GF(4)
  for (const auto& A : algebras) {
    auto rep = wedderburn(A);
    long long total = rep.radical_dim;
    for (const auto& fac : rep.factors) total += 1LL * fac.n * fac.n * fac.d * fac.e * fac.e;
    REQUIRE(total == A.dim);
    // radical of the quotient is zero
    REQUIRE(radical(rep.quotient).dim() == 0);
  }
}

TEST_CASE("truncated quiver algebras are basic split") {
  auto A = make_truncated_quiver(F2, 2, {{0, 1}, {1, 0}}, 3);
  auto rep = wedderburn(A);
  for (const auto& fac : rep.factors) {
    REQUIRE(fac.n == 1);
    REQUIRE(fac.d == 1);
  }
  REQUIRE(rep.factors.size() == 2);
  REQUIRE(rep.radical_dim == 4);
}

TEST_CASE("wedderburn over the rationals") {
  // split cases resolve
  auto M2 = make_matrix_algebra(QQ, 2);
  auto rep = wedderburn(M2);
  REQUIRE(rep.fully_resolved);
  REQUIRE(factor_shapes(rep) == std::vector<std::tuple<int, int, int>>{{2, 1, 1}});

  auto T2 = make_upper_triangular(QQ, 2);
  auto rept = wedderburn(T2);
  REQUIRE(rept.fully_resolved);
  REQUIRE(rept.radical_dim == 1);

  // Q(i) = Q[x]/(x^2+1): center does not split by rational root search
  auto Qi = algebra_from_table(
      QQ, 2,
      {{0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 0, 1, Rational(1)}, {1, 1, 0, Rational(-1)}});
  auto repi = wedderburn(Qi);
  REQUIRE(!repi.fully_resolved);
  REQUIRE_THROWS_MATCHES(require_resolved(repi), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::UnresolvedFactor; }));

  // quaternions over Q: all nonzero elements invertible, split never verified
  std::vector<std::tuple<int, int, int, Rational>> quat;
  auto put = [&](int i, int j, int k, int s) { quat.emplace_back(i, j, k, Rational(s)); };
  // basis 1, i, j, k
  put(0, 0, 0, 1);
  for (int t = 1; t < 4; ++t) {
    put(0, t, t, 1);
    put(t, 0, t, 1);
    put(t, t, 0, -1);
  }
  put(1, 2, 3, 1);
  put(2, 1, 3, -1);
  put(2, 3, 1, 1);
  put(3, 2, 1, -1);
  put(3, 1, 2, 1);
  put(1, 3, 2, -1);
  auto H = algebra_from_table(QQ, 4, quat);
  auto reph = wedderburn(H);
  REQUIRE(reph.radical_dim == 0);
  REQUIRE(!reph.fully_resolved);
  REQUIRE(!reph.factors[0].commutative_division);
}

TEST_CASE("centralizer examples") {
  // centralizer of the scalars is everything
  auto M2 = make_matrix_algebra(F2, 2);
  Vec<FiniteField> I = {1, 0, 0, 1};
  auto C = centralizer(M2, rref(F2, Mat<FiniteField>{I}, 4));
  REQUIRE(C.carrier.is_full());

  // GF(4) embedded in M2(GF(2)) by left regular representation is
  // self-centralizing (strictly maximal subfield)
  // companion matrix of x^2+x+1: Theta = E21 + E12 + E22... columns:
  // theta*1 = theta -> (0,1), theta*theta = 1 + theta -> (1,1)
  Vec<FiniteField> Theta = {0, 1, 1, 1};
  auto Fcar = rref(F2, Mat<FiniteField>{I, Theta}, 4);
  REQUIRE(is_closed(M2, Fcar));
  auto CF = centralizer(M2, Fcar);
  REQUIRE(CF.carrier == Fcar);

  // block-diagonal GF(4) inside M4(GF(2)): centralizer has dimension 8 and is
  // isomorphic to M2(GF(4))
  auto M4 = make_matrix_algebra(F2, 4);
  auto unit = [&](int i, int j) { return unit_vec(F2, 16, i * 4 + j); };
  Vec<FiniteField> I4(16, 0);
  for (int i = 0; i < 4; ++i) I4[i * 4 + i] = 1;
  // Theta block-diagonally in both 2x2 blocks
  Vec<FiniteField> Th2(16, 0);
  Th2 = vec_add(F2, vec_add(F2, unit(0, 1), unit(1, 0)), unit(1, 1));
  Th2 = vec_add(F2, Th2, vec_add(F2, vec_add(F2, unit(2, 3), unit(3, 2)), unit(3, 3)));
  auto Fblk = rref(F2, Mat<FiniteField>{I4, Th2}, 16);
  REQUIRE(is_closed(M4, Fblk));
  auto Cblk = centralizer(M4, Fblk);
  REQUIRE(Cblk.carrier.dim() == 8);
  REQUIRE(is_closed(M4, Cblk.carrier));
  auto [ind, emb] = induced_subalgebra(M4, Cblk.carrier);
  auto repc = wedderburn(ind);
  REQUIRE(factor_shapes(repc) == std::vector<std::tuple<int, int, int>>{{2, 2, 1}});
}

TEST_CASE("solvable radical") {
  // T2(GF(2)): whole algebra
  auto T2 = make_upper_triangular(F2, 2);
  REQUIRE(solvable_radical(T2).dim() == 3);

  // M2(GF(2)): zero
  auto M2 = make_matrix_algebra(F2, 2);
  REQUIRE(solvable_radical(M2).dim() == 0);

  // M2(GF(2)) x GF(4): the GF(4) factor
  auto A = direct_product(make_matrix_algebra(F2, 2), make_field_extension(F2, 2));
  auto R = solvable_radical(A);
  REQUIRE(R.dim() == 2);
  REQUIRE(member(F2, R, unit_vec(F2, 6, 4)));
  // A/R is M2(GF(2))
  auto [Q, proj] = quotient_by_ideal(A, R);
  auto repq = wedderburn(Q);
  REQUIRE(factor_shapes(repq) == std::vector<std::tuple<int, int, int>>{{2, 1, 1}});

  // contains the radical, and A/R has no commutative factor left
  auto T3 = make_upper_triangular(F2, 3);
  auto repT = wedderburn(T3);
  auto RT = solvable_radical(T3, repT);
  REQUIRE(RT.dim() == 6);  // basic split: everything is solvable
  REQUIRE(contains(F2, RT, repT.radical));
}

TEST_CASE("centralizer output is closed for random subspaces") {
  auto M2 = make_matrix_algebra(F3, 2);
  std::mt19937 rng(5);
  for (int iter = 0; iter < 30; ++iter) {
    Mat<FiniteField> rows;
    for (int r = 0; r < 2; ++r) {
      Vec<FiniteField> v(4);
      for (auto& x : v) x = FiniteField::Elem(rng() % 3);
      rows.push_back(std::move(v));
    }
    auto S = rref(F3, rows, 4);
    auto C = centralizer(M2, S);
    REQUIRE(is_closed(M2, C.carrier));
  }
}
