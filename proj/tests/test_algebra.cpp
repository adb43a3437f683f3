#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chekanov/algebra.hpp"
#include "chekanov/dga.hpp"
#include "helpers.hpp"

using namespace chek;

namespace {

AlgebraPtr small_algebra() {
  return std::make_shared<Algebra>(std::vector<Generator>{
      {"x", 1, {}}, {"y", 0, {}}, {"z", -1, {}}});
}

Poly random_poly(const AlgebraPtr& alg, std::mt19937& rng, int max_words = 4,
                 int max_len = 3) {
  std::uniform_int_distribution<int> nw(0, max_words);
  std::uniform_int_distribution<int> nl(0, max_len);
  std::uniform_int_distribution<int> gi(0, alg->size() - 1);
  std::vector<Word> ws;
  int count = nw(rng);
  for (int i = 0; i < count; ++i) {
    Word w;
    int len = nl(rng);
    for (int j = 0; j < len; ++j) w.push_back(gi(rng));
    ws.push_back(std::move(w));
  }
  return Poly(alg, std::move(ws));
}

}  // namespace

TEST_CASE("multiplication: concatenation, cancellation, zero") {
  auto dga = testutil::m946();
  auto alg = dga->alg;

  auto p = parse_poly(alg, "a5*c2");
  auto q = parse_poly(alg, "b2");
  CHECK(to_string(p * q) == "a5*c2*b2");

  auto r = parse_poly(alg, "1+b2");
  CHECK(to_string(r * r) == "1+b2*b2");

  auto zero = parse_poly(alg, "0");
  CHECK((zero * parse_poly(alg, "c1+1")).is_zero());
}

TEST_CASE("mixed-algebra operands are rejected") {
  auto alg1 = small_algebra();
  auto alg2 = std::make_shared<Algebra>(std::vector<Generator>{{"u", 1, {}}});
  auto p = parse_poly(alg1, "x");
  auto q = parse_poly(alg2, "u");
  CHECK_THROWS(p * q);
  CHECK_THROWS(p + q);
}

TEST_CASE("poly parsing is order-independent and printing canonical") {
  auto dga = testutil::m946();
  auto alg = dga->alg;
  auto a = parse_poly(alg, "1+a5*c2*b2+b1*b6+b2");
  auto b = parse_poly(alg, "b2+b1*b6+1+a5*c2*b2");
  CHECK(a == b);
  CHECK(to_string(a) == "1+b2+b1*b6+a5*c2*b2");
  // parse/print round trip is exact on canonical forms
  CHECK(to_string(parse_poly(alg, to_string(a))) == to_string(a));
  CHECK_THROWS(parse_poly(alg, "nope"));
  CHECK_THROWS(parse_poly(alg, "a1+"));
}

TEST_CASE("canonical order: length then declaration index") {
  auto dga = testutil::m946();
  auto alg = dga->alg;
  auto p = parse_poly(alg, "b6*c1*a5+b2+b6*b4*b2+1+b2*c2*b3*a5+b6+b2*c2*a4*b2");
  CHECK(to_string(p) == "1+b2+b6+b6*b4*b2+b6*c1*a5+b2*c2*a4*b2+b2*c2*b3*a5");
}

TEST_CASE("differentiate: Leibniz on m(9_46) rows") {
  auto dga = testutil::m946();
  auto alg = dga->alg;
  CHECK(to_string(differentiate(*dga, parse_poly(alg, "b3*b1"))) == "b2*c1*b1");
  CHECK(differentiate(*dga, Poly::one(alg)).is_zero());
  CHECK(to_string(differentiate(*dga, parse_poly(alg, "a5*c2*b2"))) == "b1*b2*c2*b2");
  CHECK_THROWS(differentiate(*dga, parse_poly(small_algebra(), "x")));
}

TEST_CASE("verify_dga: shipped m(9_46) differential passes") {
  auto dga = testutil::m946();
  auto rep = verify_dga(*dga);
  for (const auto& item : rep.items) {
    INFO(item.generator << ": " << item.detail);
    CHECK(item.degree_ok);
    CHECK(item.d2_ok);
  }
  CHECK(rep.pass());

  // d^2(a4) expands to b2*c1*b1 + b2*c1*b1 = 0
  auto dd = differentiate(*dga, dga->d("a4"));
  CHECK(dd.is_zero());
}

TEST_CASE("verify_dga: degree violation is reported") {
  auto alg = std::make_shared<Algebra>(std::vector<Generator>{{"a", 0, {}}, {"b", 0, {}}});
  Dga dga;
  dga.alg = alg;
  dga.diff = {parse_poly(alg, "b"), Poly::zero(alg)};
  auto rep = verify_dga(dga);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.items[0].degree_ok);
}

TEST_CASE("verify_dga: action decrease checked when actions present") {
  auto alg = std::make_shared<Algebra>(std::vector<Generator>{
      {"a", 1, Rat(1)}, {"b", 0, Rat(2)}});
  Dga dga;
  dga.alg = alg;
  dga.diff = {parse_poly(alg, "b"), Poly::zero(alg)};  // h(b) > h(a): must fail
  auto rep = verify_dga(dga);
  CHECK_FALSE(rep.pass());
  CHECK(rep.items[0].action_checked);
  CHECK_FALSE(rep.items[0].action_ok);
}

TEST_CASE("algebra properties on random polys") {
  auto alg = small_algebra();
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = random_poly(alg, rng), q = random_poly(alg, rng), r = random_poly(alg, rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * Poly::one(alg) == p);
    CHECK(Poly::one(alg) * p == p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p + q == q + p);
    CHECK((p + p).is_zero());
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("Leibniz identity on random word pairs") {
  auto dga = testutil::m946();
  auto alg = dga->alg;
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 150; ++trial) {
    Poly p = random_poly(alg, rng, 3, 3), q = random_poly(alg, rng, 3, 3);
    Poly lhs = differentiate(*dga, p * q);
    Poly rhs = differentiate(*dga, p) * q + p * differentiate(*dga, q);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("dga json round trip is bit-exact on canonical forms") {
  auto dga = testutil::m946();
  auto j = dga_to_json(*dga);
  auto back = dga_from_json(j);
  CHECK(dga_to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("rationals parse from fraction and decimal forms") {
  CHECK(rat_from_string("10.5") == Rat(21, 2));
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-2") == Rat(-2));
  CHECK(rat_to_string(Rat(21, 2)) == "21/2");
  CHECK_THROWS(rat_from_string("1/0"));
}
