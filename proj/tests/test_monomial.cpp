#include <doctest.h>

#include <random>

#include "motgraph/monomial.hpp"

using namespace motg;

TEST_CASE("group arithmetic") {
  Monomial two_a_binv = parse_monomial("2*a/b");
  Monomial three_b = parse_monomial("3*b");
  CHECK((two_a_binv * three_b) == parse_monomial("6*a"));
  CHECK(parse_monomial("r2*r5/r4").inverse() == parse_monomial("r4/(r2*r5)"));
  CHECK(Monomial::symbol("a").pow(0).is_one());
  CHECK(parse_monomial("a^2*b").pow(-2) == parse_monomial("a^-4*b^-2"));
}

TEST_CASE("mul is an abelian group on random monomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> expd(-3, 3);
  std::uniform_int_distribution<int> cd(1, 5);
  auto rand_mono = [&]() {
    Monomial m(Rational(cd(rng), cd(rng)));
    for (int i = 0; i < 3; ++i) m = m * Monomial::symbol("s" + std::to_string(i), expd(rng));
    return m;
  };
  for (int it = 0; it < 200; ++it) {
    Monomial x = rand_mono(), y = rand_mono(), z = rand_mono();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x.inverse().inverse() == x);
    CHECK((x * x.inverse()).is_one());
  }
}

TEST_CASE("substitution") {
  // a_n * t_{n+1} / t_n with t_n -> t_{n+1} gives a_n
  Monomial m = parse_monomial("an*t4/t3");
  SubstRule identify{{"t3", SubstTarget::to(Monomial::symbol("t4"))}};
  ExtLabel r = substitute(m, identify);
  REQUIRE(r.is_regular());
  CHECK(r.value == Monomial::symbol("an"));

  SubstRule zero{{"t3", SubstTarget::to_zero()}};
  CHECK(substitute(m, zero).kind == ExtLabel::Kind::Infinity);
  CHECK(substitute(parse_monomial("t3*b"), zero).kind == ExtLabel::Kind::Zero);
  CHECK(substitute(m, SubstRule{}).value == m);

  // net zero exponent of a vanishing symbol has no limit
  Monomial collision = parse_monomial("t3*u/t3");  // cancels to u: fine
  CHECK(substitute(collision, zero).is_regular());
  SubstRule both{{"t3", SubstTarget::to_zero()}, {"t5", SubstTarget{ExtLabel::Kind::Infinity, {}}}};
  CHECK_THROWS_AS(substitute(parse_monomial("t3*t5"), both), IndeterminateForm);
}

TEST_CASE("substitute commutes with mul when regular") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> expd(-2, 2);
  auto rand_mono = [&]() {
    Monomial m;
    m = m * Monomial::symbol("t1", expd(rng)) * Monomial::symbol("u", expd(rng));
    return m;
  };
  SubstRule rule{{"t1", SubstTarget::to(parse_monomial("2*t2"))}};
  for (int it = 0; it < 100; ++it) {
    Monomial x = rand_mono(), y = rand_mono();
    ExtLabel lx = substitute(x, rule), ly = substitute(y, rule);
    ExtLabel lxy = substitute(x * y, rule);
    REQUIRE(lx.is_regular());
    REQUIRE(ly.is_regular());
    CHECK(lxy.value == lx.value * ly.value);
  }
}

TEST_CASE("numeric evaluation") {
  CHECK(evaluate(parse_monomial("2*a"), {{"a", 3.0}}) == doctest::Approx(6.0));
  CHECK(evaluate(parse_monomial("a/b"), {{"a", 1.0}, {"b", 2.0}}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(evaluate(Monomial::symbol("a"), {}), MissingAssignment);
  CHECK_THROWS_AS(evaluate(Monomial::symbol("a"), {{"a", 0.0}}), ZeroAssignment);
}
