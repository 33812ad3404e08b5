#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "algchain/fields.hpp"
#include "algchain/poly.hpp"

using namespace algchain;

TEST_CASE("prime field GF(2)") {
  FiniteField f(FieldSpec::finite(2));
  REQUIRE(f.q() == 2);
  REQUIRE(f.add(1, 1) == 0);
  REQUIRE(f.mul(1, 1) == 1);
  REQUIRE_THROWS_MATCHES(f.inv(0), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::DivisionByZero; }));
}

TEST_CASE("GF(4) with explicit modulus x^2+x+1") {
  FiniteField f(FieldSpec::finite(2, 2, {1, 1, 1}));
  auto x = f.generator();
  REQUIRE(x == 2);
  // x * (x+1) = x^2 + x = 1
  REQUIRE(f.mul(x, f.add(x, 1)) == 1);
  // inv(x) = x + 1
  REQUIRE(f.inv(x) == f.add(x, 1));
}

TEST_CASE("reducible modulus rejected") {
  REQUIRE_THROWS_MATCHES(FiniteField(FieldSpec::finite(2, 2, {1, 0, 1})), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::ReducibleModulus; }));
}

TEST_CASE("composite p rejected") {
  REQUIRE_THROWS_MATCHES(FiniteField(FieldSpec::finite(6)), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::CompositeP; }));
}

TEST_CASE("modulus degree mismatch rejected") {
  REQUIRE_THROWS_MATCHES(FiniteField(FieldSpec::finite(2, 3, {1, 1, 1})), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::DegreeMismatch; }));
}

TEST_CASE("canonical modulus choices") {
  FiniteField f4(FieldSpec::finite(2, 2));
  REQUIRE(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  FiniteField f8(FieldSpec::finite(2, 3));
  // compared little-endian, 1+x^2+x^3 precedes 1+x+x^3
  REQUIRE(f8.modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  FiniteField f16(FieldSpec::finite(2, 4));
  REQUIRE(f16.modulus() == std::vector<std::uint32_t>{1, 0, 0, 1, 1});
  FiniteField f9(FieldSpec::finite(3, 2));
  // x^2+1 is irreducible over GF(3) and lexicographically first
  REQUIRE(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(12345);
  for (auto spec : {FieldSpec::finite(2, 4), FieldSpec::finite(3, 2), FieldSpec::finite(5),
                    FieldSpec::finite(2, 1)}) {
    FiniteField f(spec);
    for (int iter = 0; iter < 200; ++iter) {
      auto a = FiniteField::Elem(rng() % f.q());
      auto b = FiniteField::Elem(rng() % f.q());
      auto c = FiniteField::Elem(rng() % f.q());
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
      REQUIRE(f.add(a, f.neg(a)) == 0);
    }
  }
}

TEST_CASE("generator reaches the whole field and has order dividing q-1") {
  for (auto spec : {FieldSpec::finite(2, 2), FieldSpec::finite(2, 4), FieldSpec::finite(3, 2)}) {
    FiniteField f(spec);
    auto g = f.generator();
    // span of {1, g, g^2, ..., g^{m-1}} over GF(p) has p^m distinct elements
    std::vector<FiniteField::Elem> pows{1};
    for (std::uint32_t i = 1; i < f.m(); ++i) pows.push_back(f.pow(g, i));
    std::set<FiniteField::Elem> seen;
    std::vector<std::uint32_t> digits(f.m(), 0);
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < f.m(); ++i) total *= f.p();
    for (std::uint64_t code = 0; code < total; ++code) {
      auto c = code;
      FiniteField::Elem acc = 0;
      for (std::uint32_t i = 0; i < f.m(); ++i) {
        auto digit = FiniteField::Elem(c % f.p());
        c /= f.p();
        for (std::uint32_t t = 0; t < digit; ++t) acc = f.add(acc, pows[i]);
      }
      seen.insert(acc);
    }
    REQUIRE(seen.size() == f.q());
    REQUIRE((f.q() - 1) % f.multiplicative_order(g) == 0);
  }
}

TEST_CASE("frobenius is the identity on the prime subfield and invertible") {
  FiniteField f(FieldSpec::finite(2, 4));
  for (FiniteField::Elem a = 0; a < f.q(); ++a) {
    REQUIRE(f.frobenius(a, 4) == a);  // order m
    REQUIRE(f.frobenius(f.frobenius_inv(a, 1), 1) == a);
    REQUIRE(f.frobenius(a, 1) == f.mul(a, a));
  }
}

TEST_CASE("rational arithmetic is exact and canonical") {
  RationalField f;
  auto third = f.parse("1/3");
  auto sixth = f.parse("1/6");
  REQUIRE(f.str(f.add(third, sixth)) == "1/2");
  REQUIRE_THROWS_MATCHES(f.parse("2/0"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::ParseError; }));
  REQUIRE(f.str(f.mul(f.parse("-4/6"), f.parse("3/2"))) == "-1");
}

TEST_CASE("finite scalar parsing round-trips") {
  FiniteField f(FieldSpec::finite(2, 2));
  REQUIRE(f.parse("1:1") == f.add(f.generator(), 1));
  REQUIRE(f.str(f.parse("0:1")) == "0:1");
  REQUIRE(f.parse("3") == 1);  // 3 mod 2 times the identity
}

TEST_CASE("polynomial gcd and charpoly basics") {
  FiniteField f(FieldSpec::finite(2));
  // (t^2+1) = (t+1)^2 over GF(2); gcd with derivative finds the square
  Poly<FiniteField> a = poly_from(f, Vec<FiniteField>{1, 0, 1});
  auto d = poly_derivative(f, a);
  REQUIRE(d.is_zero());  // derivative of t^2+1 vanishes in char 2
  Mat<FiniteField> M = {{0, 1}, {1, 1}};
  auto cp = charpoly(f, M);
  // char poly of [[0,1],[1,1]] over GF(2) is t^2 + t + 1
  REQUIRE(cp.c == Vec<FiniteField>{1, 1, 1});
  RationalField q;
  Mat<RationalField> N = {{Rational(2), Rational(0)}, {Rational(0), Rational(3)}};
  auto cpq = charpoly(q, N);
  REQUIRE(cpq.c == Vec<RationalField>{Rational(6), Rational(-5), Rational(1)});
}
