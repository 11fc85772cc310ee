#include <random>

#include "doctest.h"
#include "mixf4/field.hpp"

using namespace mixf4;

TEST_CASE("gamma satisfies its minimal polynomial") {
  Field f(FieldSpec::default_mixed());
  QuadExtElem g = f.gamma();
  CHECK(g * g + g == f.delta());
  CHECK(g.square() == g * g);
  CHECK(g.conj() == g + f.one());
  CHECK(g.trace().is_one());
  CHECK(g.norm() == f.spec().delta);
}

TEST_CASE("field operations on parsed elements") {
  Field f(FieldSpec::default_mixed());
  QuadExtElem x = f.parse("(d*a + t) / (b + 1) + (t^2 / a)*g");
  QuadExtElem y = f.parse("a + b*g + 1/d");
  CHECK(x * x.inverse() == f.one());
  CHECK((x + y) * (x + y) == x.square() + y.square());
  CHECK((x * y).conj() == x.conj() * y.conj());
  CHECK(f.embed((x * y).norm()) == f.embed(x.norm()) * f.embed(y.norm()));
  CHECK(x * x.conj() == f.embed(x.norm()));
  CHECK(x + x.conj() == f.embed(x.trace()));
  CHECK(x / y * y == x);
  CHECK(x.pow(-3) * x.pow(3) == f.one());
}

TEST_CASE("membership in K") {
  Field f(FieldSpec::default_mixed());
  CHECK(f.parse("t^2 + d*g").in_K());
  CHECK_FALSE(f.parse("t + g").in_K());
  CHECK(f.parse("t/(t^3+t)").in_K());
  Field alg(FieldSpec::default_algebraic());
  CHECK(alg.parse("a + g").in_K());
}

TEST_CASE("printing round-trips") {
  Field f(FieldSpec::default_mixed());
  for (const char* s : {"0", "1", "g", "d + g*a", "(a + t)/(b*t) + g/(d + 1)",
                        "t^-2 * g + a^3", "(1 + g)^5 / (d + a*g)"}) {
    QuadExtElem x = f.parse(s);
    CAPTURE(s);
    CAPTURE(x.to_string());
    CHECK(f.parse(x.to_string()) == x);
  }
  CHECK(f.parse("a + a") == f.zero());
  CHECK(f.parse("3") == f.one());
  CHECK(f.parse("-a") == f.parse("a"));
}

TEST_CASE("parser errors") {
  Field f(FieldSpec::default_mixed());
  CHECK_THROWS_AS(f.parse("x + 1"), ParseError);
  CHECK_THROWS_AS(f.parse("(a"), ParseError);
  CHECK_THROWS_AS(f.parse("a / 0"), ParseError);
  CHECK_THROWS_AS(f.parse_base("a + g"), ParseError);
}

TEST_CASE("field spec validation") {
  FieldSpec s = FieldSpec::default_mixed();
  s.alpha = RatFunc(Poly::var(3));  // t is not in k
  CHECK_THROWS_AS(Field{s}, ConfigError);
  FieldSpec s2 = FieldSpec::default_mixed();
  s2.indeterminates[1] = "g";
  CHECK_THROWS_AS(Field{s2}, ConfigError);
  FieldSpec s3 = FieldSpec::default_mixed();
  s3.mixed_var = std::nullopt;
  CHECK_THROWS_AS(Field{s3}, ConfigError);
}
