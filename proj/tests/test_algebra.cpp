#include <catch2/catch_amalgamated.hpp>

#include "algchain/algebra.hpp"

using namespace algchain;

namespace {
const FiniteField F2{FieldSpec::finite(2)};
const FiniteField F3{FieldSpec::finite(3)};

bool has_code(const Error& e, Errc c) { return e.code() == c; }

int unit_index(int n, int i, int j) { return i * n + j; }
}  // namespace

TEST_CASE("one-dimensional tables") {
  auto k = algebra_from_table(F2, 1, {{0, 0, 0, FiniteField::Elem(1)}});
  REQUIRE(k.unital == 0);
  auto nil = algebra_from_table(F2, 1, {});
  REQUIRE(!nil.unital.has_value());
  REQUIRE(is_zero_vec(F2, multiply(nil, unit_vec(F2, 1, 0), unit_vec(F2, 1, 0))));
}

TEST_CASE("non-associative table rejected with witness") {
  // e0*e0 = e1, e0*e1 = e0: (e0 e0) e0 = e1 e0 = 0 but e0 (e0 e0) = e0 e1 = e0
  std::vector<std::tuple<int, int, int, FiniteField::Elem>> entries = {
      {0, 0, 1, 1}, {0, 1, 0, 1}};
  REQUIRE_THROWS_MATCHES(
      algebra_from_table(F2, 2, entries), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::NotAssociative); }));
  // and accepted when checking is deferred
  auto A = algebra_from_table(F2, 2, entries, false);
  REQUIRE(associativity_witness(A).has_value());
}

TEST_CASE("index out of range rejected") {
  REQUIRE_THROWS_MATCHES(
      algebra_from_table(F2, 1, {{0, 0, 3, FiniteField::Elem(1)}}), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::IndexOutOfRange); }));
}

TEST_CASE("matrix algebra M2(GF(2))") {
  auto A = make_matrix_algebra(F2, 2);
  REQUIRE(A.dim == 4);
  REQUIRE(!associativity_witness(A).has_value());
  auto E12 = unit_vec(F2, 4, unit_index(2, 0, 1));
  auto E21 = unit_vec(F2, 4, unit_index(2, 1, 0));
  auto E11 = unit_vec(F2, 4, unit_index(2, 0, 0));
  REQUIRE(multiply(A, E12, E21) == E11);
  REQUIRE(is_zero_vec(F2, multiply(A, E12, E12)));
}

TEST_CASE("GF(4) as algebra over GF(2) via field_extension") {
  auto A = make_field_extension(F2, 2);
  REQUIRE(A.dim == 2);
  REQUIRE(A.unital == 0);
  auto x = unit_vec(F2, 2, 1);
  auto xp1 = Vec<FiniteField>{1, 1};
  // x * (x+1) = x^2 + x = 1 under x^2 = x+1
  REQUIRE(multiply(A, x, xp1) == unit_vec(F2, 2, 0));
}

TEST_CASE("field_extension over the rationals is unsupported") {
  RationalField q;
  REQUIRE_THROWS_MATCHES(
      make_field_extension(q, 2), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::UnsupportedOverRationals); }));
}

TEST_CASE("parabolic subalgebra dimensions") {
  auto P = make_parabolic(F2, 3, Partition{{2, 1}});
  REQUIRE(P.dim == 7);
  REQUIRE(!associativity_witness(P).has_value());
  REQUIRE_THROWS_MATCHES(
      make_parabolic(F2, 3, Partition{{2, 2}}), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::BadPartition); }));
}

TEST_CASE("matrix algebra with extension entries") {
  // M2(GF(4)) as an 8-dimensional GF(2)-algebra
  auto A = make_matrix_algebra(F2, 2, 2);
  REQUIRE(A.dim == 8);
  REQUIRE(!associativity_witness(A).has_value());
  // (E11 x) * (E11 x) = E11 x^2 = E11 (x+1)
  Vec<FiniteField> e11x = unit_vec(F2, 8, 1);
  auto sq = multiply(A, e11x, e11x);
  Vec<FiniteField> expect(8, 0);
  expect[0] = 1;
  expect[1] = 1;
  REQUIRE(sq == expect);
}

TEST_CASE("closure examples") {
  auto A = make_matrix_algebra(F2, 2);
  auto E12 = unit_vec(F2, 4, unit_index(2, 0, 1));
  auto H = closure(A, {E12});
  REQUIRE(H.carrier.dim() == 1);
  auto E11 = unit_vec(F2, 4, unit_index(2, 0, 0));
  auto E21 = unit_vec(F2, 4, unit_index(2, 1, 0));
  auto full = closure(A, {E11, E12, E21});
  REQUIRE(full.carrier.is_full());
  auto empty = closure(A, {});
  REQUIRE(empty.carrier.dim() == 0);
}

TEST_CASE("induced subalgebra and round trip") {
  auto A = make_matrix_algebra(F2, 2);
  auto E11 = unit_vec(F2, 4, 0);
  auto E12 = unit_vec(F2, 4, 1);
  auto E22 = unit_vec(F2, 4, 3);
  auto S = rref(F2, Mat<FiniteField>{E11, E12, E22}, 4);
  auto [T, embed] = induced_subalgebra(A, S);
  REQUIRE(T.dim == 3);
  // isomorphic to T2(GF(2)): has an identity (E11+E22) and 1-dim radical
  REQUIRE(find_identity(T).has_value());

  // round trip: re-embedding the induced basis gives back the same carrier
  Mat<FiniteField> back;
  for (int i = 0; i < T.dim; ++i) back.push_back(embed[i]);
  REQUIRE(rref(F2, back, 4) == S);

  // non-closed subspace rejected
  auto bad = rref(F2, Mat<FiniteField>{vec_add(F2, E12, unit_vec(F2, 4, 2))}, 4);
  REQUIRE_THROWS_MATCHES(
      induced_subalgebra(A, bad), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::NotClosed); }));
}

TEST_CASE("quotient by ideal") {
  auto T2 = make_upper_triangular(F2, 2);  // basis E11, E12, E22
  auto U2 = rref(F2, Mat<FiniteField>{unit_vec(F2, 3, 1)}, 3);
  auto [Q, proj] = quotient_by_ideal(T2, U2);
  REQUIRE(Q.dim == 2);
  // Q is GF(2) x GF(2): e_i^2 = e_i, e0 e1 = 0
  auto e0 = unit_vec(F2, 2, 0), e1 = unit_vec(F2, 2, 1);
  REQUIRE(multiply(Q, e0, e0) == e0);
  REQUIRE(multiply(Q, e1, e1) == e1);
  REQUIRE(is_zero_vec(F2, multiply(Q, e0, e1)));

  // projection is multiplicative on all basis pairs
  for (int i = 0; i < T2.dim; ++i)
    for (int j = 0; j < T2.dim; ++j) {
      auto lhs = multiply(Q, proj[i], proj[j]);
      auto w = multiply(T2, unit_vec(F2, 3, i), unit_vec(F2, 3, j));
      Vec<FiniteField> rhs(Q.dim, 0);
      for (int k = 0; k < T2.dim; ++k)
        if (w[k]) rhs = vec_add(F2, rhs, proj[k]);
      REQUIRE(lhs == rhs);
    }

  // quotient by the zero ideal is A itself
  auto [Q0, proj0] = quotient_by_ideal(T2, zero_subspace<FiniteField>(3));
  REQUIRE(Q0.dim == 3);
  REQUIRE(serialize_algebra(Q0) == serialize_algebra(T2));

  // span{E11} is not an ideal of M2
  auto M2 = make_matrix_algebra(F2, 2);
  auto I = rref(F2, Mat<FiniteField>{unit_vec(F2, 4, 0)}, 4);
  REQUIRE_THROWS_MATCHES(
      quotient_by_ideal(M2, I), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::NotAnIdeal); }));
}

TEST_CASE("direct products") {
  auto k = algebra_from_table(F2, 1, {{0, 0, 0, FiniteField::Elem(1)}});
  auto kk = direct_product(k, k);
  REQUIRE(kk.dim == 2);
  auto e0 = unit_vec(F2, 2, 0), e1 = unit_vec(F2, 2, 1);
  REQUIRE(multiply(kk, e0, e0) == e0);
  REQUIRE(is_zero_vec(F2, multiply(kk, e0, e1)));

  auto M2 = make_matrix_algebra(F2, 2);
  auto G4 = make_field_extension(F2, 2);
  REQUIRE(direct_product(M2, G4).dim == 6);
  REQUIRE(direct_product(M2, make_zero_algebra(F2)).dim == 4);

  auto k3 = algebra_from_table(F3, 1, {{0, 0, 0, FiniteField::Elem(1)}});
  REQUIRE_THROWS_MATCHES(
      direct_product(k, k3), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::FieldMismatch); }));
}

TEST_CASE("truncated quiver algebra") {
  // 2 vertices, arrows a:0->1 and b:1->0, truncation 3:
  // basis e0, e1, a, b, ab, ba
  auto A = make_truncated_quiver(F2, 2, {{0, 1}, {1, 0}}, 3);
  REQUIRE(A.dim == 6);
  REQUIRE(!associativity_witness(A).has_value());
  REQUIRE_THROWS_MATCHES(
      make_truncated_quiver(F2, 2, {{0, 1}}, 1), Error,
      Catch::Matchers::Predicate<Error>([](const Error& e) { return has_code(e, Errc::TruncationTooSmall); }));
  // single loop truncated at 3 is k[x]/(x^3)
  auto B = make_truncated_quiver(F2, 1, {{0, 0}}, 3);
  REQUIRE(B.dim == 3);
  REQUIRE(B.unital == 0);
}

TEST_CASE("conjugated table is associative and isomorphic in dimension") {
  auto A = make_matrix_algebra(F3, 2);
  Mat<FiniteField> P = {{1, 1, 0, 0}, {0, 1, 0, 2}, {0, 0, 1, 1}, {2, 0, 0, 1}};
  auto B = conjugate_table(A, P);
  REQUIRE(B.dim == 4);
  REQUIRE(!associativity_witness(B).has_value());
}

TEST_CASE("serialization is deterministic") {
  auto A = make_upper_triangular(F2, 2);
  auto B = make_upper_triangular(F2, 2);
  REQUIRE(serialize_algebra(A) == serialize_algebra(B));
}
