#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace reeskit;
using namespace testing_util;

TEST_CASE("poly_add examples") {
  auto r = ring({"x", "y"});
  CHECK(P(r, "x + 1") + P(r, "-x") == P(r, "1"));
  auto f = P(r, "x^2*y - 3*y + 2");
  CHECK(f + Polynomial(r) == f);
  CHECK(P(r, "x^2 + y") + P(r, "x^2 - y") == P(r, "2*x^2"));
}

TEST_CASE("poly_mul examples") {
  auto r = ring({"x", "y"});
  CHECK(P(r, "x + y") * P(r, "x - y") == P(r, "x^2 - y^2"));
  auto f = P(r, "x^3 - 1/2*x*y");
  CHECK(f * P(r, "1") == f);
  auto f2 = ring({"x"}, "degrevlex", Field::prime(2));
  CHECK(pow(P(f2, "x + 1"), 2) == P(f2, "x^2 + 1"));
}

TEST_CASE("ring mismatch is an error") {
  auto a = ring({"x", "y"});
  auto b = ring({"u", "v"});
  CHECK_THROWS_AS(P(a, "x") + P(b, "u"), RingMismatch);
  CHECK_THROWS_AS(P(a, "x") * P(b, "u"), RingMismatch);
}

TEST_CASE("weighted_degree with negative weights") {
  auto r = PolyRing::make(Field::rationals(), {"X1", "X2", "T"}, MonomialOrder::degrevlex(3), {1, 1, -1});
  CHECK(*weighted_degree(P(r, "X1*X2")) == 2);
  CHECK(*weighted_degree(P(r, "T^3")) == -3);
  CHECK(*weighted_degree(P(r, "X1*T")) == 0);
  CHECK_FALSE(weighted_degree(Polynomial(r)).has_value());
}

TEST_CASE("mono_cmp examples") {
  CHECK(mono_cmp(MonomialOrder::lex(2), std::vector{1, 0}, std::vector{0, 2}) == Cmp::GT);
  CHECK(mono_cmp(MonomialOrder::degrevlex(2), std::vector{1, 0}, std::vector{0, 2}) == Cmp::LT);
  CHECK(mono_cmp(MonomialOrder::degrevlex(2), std::vector{3, 1}, std::vector{3, 1}) == Cmp::EQ);
  CHECK_THROWS(mono_cmp(MonomialOrder::lex(2), std::vector{1}, std::vector{0, 2}));
}

TEST_CASE("field construction rejects composite moduli") {
  CHECK_THROWS(Field::prime(4));
  CHECK_NOTHROW(Field::prime(2305843009213693951ULL));  // Mersenne prime 2^61 - 1
  CHECK_THROWS(Field::prime(2305843009213693951ULL + 2));
}

TEST_CASE("rational canonical form") {
  Field q;
  FieldElem a = q.add(FieldElem(1, 6), FieldElem(1, 3));
  CHECK(a.get_num() == 1);
  CHECK(a.get_den() == 2);
  Field f7 = Field::prime(7);
  CHECK(f7.normalize(FieldElem(1, 2)) == 4);
  CHECK(f7.normalize(FieldElem(-1)) == 6);
}

TEST_CASE("ring laws on random polynomials") {
  auto r = ring({"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b).check_canonical());
    CHECK((a + b).check_canonical());
    if (!a.is_zero() && !b.is_zero()) {
      CHECK_FALSE((a * b).is_zero());
      CHECK(*weighted_degree(a * b) == *weighted_degree(a) + *weighted_degree(b));
    }
  }
}

TEST_CASE("term orders are multiplicative well-orders with 1 minimal") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ex(0, 4);
  std::vector<MonomialOrder> orders{
      MonomialOrder::lex(4), MonomialOrder::degrevlex(4), MonomialOrder::weighted({1, 2, 3, 1}),
      MonomialOrder::block({MonomialOrder::degrevlex(1), MonomialOrder::weighted({2, 1, 1})})};
  for (const auto& o : orders) {
    for (int i = 0; i < 1000; ++i) {
      Monomial a, b, n;
      for (int v = 0; v < 4; ++v) {
        a[v] = ex(rng);
        b[v] = ex(rng);
        n[v] = ex(rng);
      }
      CHECK(o.compare(a, Monomial{}) != Cmp::LT);
      Cmp ab = o.compare(a, b);
      CHECK(o.compare(a * n, b * n) == ab);
      CHECK((ab == Cmp::EQ) == (a == b));
      CHECK(o.compare(b, a) == static_cast<Cmp>(-static_cast<int>(ab)));
    }
  }
}

TEST_CASE("parser diagnostics") {
  auto r = ring({"y1", "y2"});
  CHECK(P(r, "(y1 + y2)^2 - 2*y1*y2") == P(r, "y1^2 + y2^2"));
  CHECK(P(r, "3/6*y1") == P(r, "1/2*y1"));
  CHECK_THROWS_WITH(P(r, "y1 + z"), doctest::Contains("unknown variable 'z'"));
  CHECK_THROWS(P(r, "y1 y2"));
}

TEST_CASE("to_string round trip") {
  auto r = ring({"y1", "y2", "T"});
  auto f = P(r, "-3/2*y1^2*T + y2 - 7");
  CHECK(P(r, f.to_string()) == f);
}
