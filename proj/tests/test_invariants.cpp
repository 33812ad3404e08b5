#include <catch2/catch_amalgamated.hpp>

#include "algchain/invariants.hpp"

using namespace algchain;

namespace {
InvariantInput simple(int n, int d, int e = 1) {
  InvariantInput in;
  in.factors = {{n, d, e}};
  in.dim = in.factors[0].block_dim();
  in.radical_dim = 0;
  return in;
}
}  // namespace

TEST_CASE("omega") {
  REQUIRE(omega(1) == 0);
  REQUIRE(omega(12) == 3);
  REQUIRE(omega(8) == 3);
  REQUIRE_THROWS_MATCHES(omega(0), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == Errc::NonPositive;
                         }));
}

TEST_CASE("goldbach triples") {
  REQUIRE(goldbach_triple(7) == std::tuple<long long, long long, long long>{2, 2, 3});
  REQUIRE(goldbach_triple(9) == std::tuple<long long, long long, long long>{2, 2, 5});
  REQUIRE(goldbach_triple(13) == std::tuple<long long, long long, long long>{3, 3, 7});
  REQUIRE_THROWS_MATCHES(goldbach_triple(8), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::BadInput; }));
  REQUIRE_THROWS_MATCHES(goldbach_triple(5), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::BadInput; }));
}

TEST_CASE("halving cost") {
  REQUIRE(halving_cost(1) == 0);
  REQUIRE(halving_cost(2) == 3);
  REQUIRE(halving_cost(3) == 6);
  REQUIRE(halving_cost(4) == 6);
  REQUIRE(halving_cost(7) == 12);
}

TEST_CASE("length formula paper constants") {
  // l(M_n(k)) = n(n+1)/2 + n - 1
  REQUIRE(length_formula(simple(2, 1)) == 4);
  REQUIRE(length_formula(simple(3, 1)) == 8);
  REQUIRE(length_formula(simple(4, 1)) == 13);
  // T_2(k): radical dim 1 + two split 1-dim factors -> 3 = dim
  InvariantInput t2;
  t2.dim = 3;
  t2.radical_dim = 1;
  t2.factors = {{1, 1, 1}, {1, 1, 1}};
  REQUIRE(length_formula(t2) == 3);
  // M_2(GF(4)) over GF(2): 1 + 2 + 2*(Omega(2)+1) = 7
  REQUIRE(length_formula(simple(2, 2)) == 7);
}

TEST_CASE("quaternion-style length via hints") {
  auto in = simple(1, 1, 2);  // dim 4 division algebra with center k
  REQUIRE_THROWS_MATCHES(length_formula(in), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::MissingDivisionHint; }));
  DivisionHints hints{{0, {3, 3}}};
  REQUIRE(length_formula(in, hints) == 3);
}

TEST_CASE("parabolic length agrees with the formula") {
  auto in = simple(3, 1);
  auto par = parabolic_length(in);
  REQUIRE(par.rank == 2);
  REQUIRE(par.borel_length == 6);
  REQUIRE(par.total == 8);
  REQUIRE(par.total == length_formula(in));

  InvariantInput mixed;
  mixed.dim = 5;
  mixed.radical_dim = 0;
  mixed.factors = {{2, 1, 1}, {1, 1, 1}};
  auto pm = parabolic_length(mixed);
  REQUIRE(pm.rank == 1);
  REQUIRE(pm.borel_length == 3 + 1);
  REQUIRE(pm.total == 5);
  REQUIRE(pm.total == length_formula(mixed));
}

TEST_CASE("length formula is additive over products") {
  InvariantInput a = simple(2, 1);
  InvariantInput b = simple(1, 2);
  InvariantInput ab;
  ab.dim = a.dim + b.dim;
  ab.radical_dim = 0;
  ab.factors = {a.factors[0], b.factors[0]};
  REQUIRE(length_formula(ab) == length_formula(a) + length_formula(b));
}

TEST_CASE("depth bounds") {
  // algebraically closed, M_8: [3*3+1, 6*3+1] = [10, 19]
  auto b8 = depth_bounds(simple(8, 1), FieldClass::algebraically_closed_symbolic);
  REQUIRE(b8.lower == 10);
  REQUIRE(b8.upper == 19);

  // finite, M_2(GF(2)): upper = min{7, 1+2, 2+0+1} = 3, lower = 2
  auto b2 = depth_bounds(simple(2, 1), FieldClass::finite);
  REQUIRE(b2.lower == 2);
  REQUIRE(b2.upper == 3);

  // finite split factors never exceed 16
  for (long long n : {2, 3, 4, 6, 8, 12, 30, 64, 210, 1 << 16, 510510}) {
    auto b = depth_bounds(simple(int(n), 1), FieldClass::finite);
    REQUIRE(b.upper <= 16);
    REQUIRE(b.lower <= b.upper);
  }

  // nilpotent: exactly the dimension
  InvariantInput nil;
  nil.dim = 3;
  nil.radical_dim = 3;
  auto bn = depth_bounds(nil, FieldClass::finite);
  REQUIRE(bn.lower == 3);
  REQUIRE(bn.upper == 3);

  // quadratically closed symbolic lower bound: log2(dim)+1
  auto bq = depth_bounds(simple(4, 1), FieldClass::quadratically_closed_symbolic);
  REQUIRE(bq.lower == ceil_log2(16) + 1);
}

TEST_CASE("cd bounds and the matrix dimension bound") {
  auto cd = cd_bounds(4, 3, 3);
  REQUIRE(cd.lower == 1);
  REQUIRE(cd.upper == 1);
  REQUIRE(matrix_dim_bound_ok(2, cd));  // 2 <= sqrt(20)
  REQUIRE_THROWS_MATCHES(cd_bounds(2, 3, 3), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::InconsistentBounds; }));
}

TEST_CASE("condition star") {
  // basic split
  InvariantInput t3;
  t3.dim = 6;
  t3.radical_dim = 3;
  t3.factors = {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  REQUIRE(condition_star(t3).holds);

  // M2(k) over a finite field: delta = 1 impossible
  REQUIRE(!condition_star(simple(2, 1)).holds);

  // GF(4) x GF(8): coprime degrees
  InvariantInput p48;
  p48.dim = 5;
  p48.radical_dim = 0;
  p48.factors = {{1, 3, 1}, {1, 2, 1}};
  REQUIRE(condition_star(p48).holds);

  // GF(4) x GF(4): the quadratic subfield embeds twice
  InvariantInput p44;
  p44.dim = 4;
  p44.radical_dim = 0;
  p44.factors = {{1, 2, 1}, {1, 2, 1}};
  REQUIRE(!condition_star(p44).holds);
}

TEST_CASE("length equals dim family") {
  REQUIRE(predicts_length_equals_dim(simple(2, 1)));
  REQUIRE(predicts_length_equals_dim(simple(1, 2)));
  REQUIRE(!predicts_length_equals_dim(simple(3, 1)));
  REQUIRE(!predicts_length_equals_dim(simple(2, 2)));
  InvariantInput mix;
  mix.dim = 5;
  mix.radical_dim = 0;
  mix.factors = {{2, 1, 1}, {1, 1, 1}};
  REQUIRE(predicts_length_equals_dim(mix));
  // cross-check against the formula on these
  REQUIRE(length_formula(mix) == mix.dim);
  REQUIRE(length_formula(simple(3, 1)) < simple(3, 1).dim);
}

TEST_CASE("half length identity") {
  REQUIRE(!half_length_check(1, 5));  // l = 2 < 5/2
  REQUIRE(half_length_check(2, 5));   // equality at dim/2
  REQUIRE(half_length_check(1, 4));
  for (long long d : {1, 2, 3, 4, 6, 8}) REQUIRE(half_length_check(1, d));
  for (long long d : {7, 9, 10, 12, 16}) REQUIRE(!half_length_check(1, d));
  REQUIRE_THROWS_MATCHES(half_length_check(0, 1), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::BadDegree; }));
}

TEST_CASE("solvable radical bound check") {
  auto r = solvable_bound_check(4, 1, true);
  REQUIRE(r.ok);
  REQUIRE(!r.exempt);
  auto r0 = solvable_bound_check(0, 0, true);
  REQUIRE(r0.ok);
  auto rb = solvable_bound_check(4, 0, true);
  REQUIRE(!rb.ok);
  REQUIRE(!rb.exempt);
  auto re = solvable_bound_check(4, 0, false);
  REQUIRE(!re.ok);
  REQUIRE(re.exempt);
}

TEST_CASE("assembled report consistency") {
  auto rep = assemble_invariants(simple(3, 1), FieldClass::finite);
  REQUIRE(rep.length == 8);
  REQUIRE(rep.rank == 2);
  REQUIRE(rep.depth.lower == 2);
  REQUIRE(rep.depth.upper == 3);
  REQUIRE(rep.cd.lower == 5);
  REQUIRE(rep.cd.upper == 6);
  REQUIRE(rep.length_equals_dim.has_value());
  REQUIRE(!*rep.length_equals_dim);
  REQUIRE(rep.cd_matrix_bound_ok.has_value());
  REQUIRE(*rep.cd_matrix_bound_ok);
  REQUIRE(rep.satisfies_condition_star.has_value());
  REQUIRE(!*rep.satisfies_condition_star);
}

TEST_CASE("f(n) stays below 2n") {
  for (long long n = 1; n <= (1 << 16); ++n) REQUIRE(halving_cost(n) <= 2 * n);
}

TEST_CASE("goldbach triples are valid for all odd n up to 10001") {
  for (long long n = 7; n <= 10001; n += 2) {
    auto [p1, p2, p3] = goldbach_triple(n);
    REQUIRE(p1 + p2 + p3 == n);
    REQUIRE(p1 <= p2);
    REQUIRE(p2 <= p3);
    for (long long p : {p1, p2, p3}) {
      bool prime = p >= 2;
      for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
      REQUIRE(prime);
    }
  }
}
