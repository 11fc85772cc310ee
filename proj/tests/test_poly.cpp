#include <random>

#include "doctest.h"
#include "mixf4/poly.hpp"
#include "mixf4/ratfunc.hpp"

using namespace mixf4;

namespace {

const std::vector<std::string> kNames = {"d", "a", "b", "t"};

Poly x(int i) { return Poly::var(i); }
Poly one() { return Poly::one(); }

Poly random_poly(std::mt19937_64& rng, int terms, unsigned maxdeg) {
  std::vector<Monomial> t;
  for (int k = 0; k < terms; ++k) {
    std::array<unsigned, kMaxVars> e{};
    for (auto& v : e) v = static_cast<unsigned>(rng() % (maxdeg + 1));
    t.push_back(mono::make(e));
  }
  return Poly::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("monomial packing orders by total degree then lex") {
  Monomial a = mono::make({2, 0, 0, 0});
  Monomial b = mono::make({0, 3, 0, 0});
  Monomial c = mono::make({1, 2, 0, 0});
  CHECK(b > a);
  CHECK(c > b);  // same total degree, more d
  CHECK(mono::divides(a, mono::make({2, 1, 0, 0})));
  CHECK_FALSE(mono::divides(a, mono::make({1, 5, 0, 0})));
  CHECK(mono::mul(a, b) == mono::make({2, 3, 0, 0}));
  CHECK_THROWS_AS(mono::mul(mono::make({4000, 0, 0, 0}), mono::make({200, 0, 0, 0})),
                  ExponentOverflow);
}

TEST_CASE("characteristic two arithmetic") {
  Poly p = x(0) + x(1);
  CHECK(p + p == Poly());
  CHECK(p * p == x(0) * x(0) + x(1) * x(1));
  CHECK(p.square() == p * p);
  CHECK((p * (x(2) + one())).to_string(kNames) == "d*b + a*b + d + a");
}

TEST_CASE("exact division") {
  Poly a = (x(0) + x(1) + one()) * (x(2) * x(3) + x(0));
  CHECK(a / (x(0) + x(1) + one()) == x(2) * x(3) + x(0));
  CHECK_FALSE(divide_exact(a, x(0) + one()).has_value());
  CHECK_THROWS(a / (x(3) + one()));
}

TEST_CASE("gcd of products with a planted factor") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Poly g = random_poly(rng, 1 + static_cast<int>(rng() % 3), 2);
    Poly u = random_poly(rng, 1 + static_cast<int>(rng() % 3), 2);
    Poly v = random_poly(rng, 1 + static_cast<int>(rng() % 3), 2);
    if (g.is_zero() || u.is_zero() || v.is_zero()) continue;
    Poly a = g * u, b = g * v;
    Poly r = gcd(a, b);
    REQUIRE_FALSE(r.is_zero());
    CHECK(divide_exact(a, r).has_value());
    CHECK(divide_exact(b, r).has_value());
    CHECK(divide_exact(r, g).has_value());
    CHECK(gcd(a / r, b / r).is_one());
    CHECK(gcd(b, a) == r);
  }
}

TEST_CASE("gcd small cases") {
  CHECK(gcd(x(0) * x(0) + one(), x(0) + one()) == x(0) + one());
  CHECK(gcd(x(0) * x(1), x(1) * x(2)) == x(1));
  CHECK(gcd(x(0) + x(1), x(0) + x(1) + one()).is_one());
  CHECK(gcd(Poly(), x(3)) == x(3));
  Poly f = x(0) * x(3) + x(1);
  CHECK(gcd(f * f * (x(2) + one()), f * (x(2) + x(0))) == f);
}

TEST_CASE("rational functions are reduced") {
  RatFunc r(x(0) * x(0) + one(), x(0) + one());
  CHECK(r.is_polynomial());
  CHECK(r.num() == x(0) + one());
  RatFunc s(one(), x(1));
  RatFunc t(one(), x(1) + one());
  // 1/a + 1/(a+1) = 1/(a(a+1))
  CHECK(s + t == RatFunc(one(), x(1) * (x(1) + one())));
  CHECK((s * t).inverse() == RatFunc(x(1) * x(1) + x(1)));
  CHECK(s / s == RatFunc::one());
  CHECK_THROWS_AS(RatFunc().inverse(), DivisionByZero);
}

TEST_CASE("parity in the mixed variable") {
  RatFunc q(x(3) * x(3) + x(0), x(3) * x(3) * x(3) * x(3) + x(1));
  CHECK(q.is_even_in(3));
  RatFunc r(x(3), one());
  CHECK_FALSE(r.is_even_in(3));
  CHECK_FALSE(RatFunc(x(3) * x(3) + x(0), x(3) * x(3) * x(3) + x(3)).is_even_in(3));
  RatFunc z(x(3) * x(3) + x(3) + x(1), x(3) * x(3) + x(0) + x(3));
  auto [e, o] = z.split_even_odd(3);
  CHECK(e.is_even_in(3));
  CHECK(o.is_even_in(3));
  CHECK(e + RatFunc(x(3)) * o == z);
}

TEST_CASE("gcd of larger operands") {
  std::mt19937_64 rng(19);
  for (int it = 0; it < 30; ++it) {
    Poly g = random_poly(rng, 4, 3) + one();
    Poly u = random_poly(rng, 5, 4) + x(static_cast<int>(it % 4));
    Poly v = random_poly(rng, 5, 4) + one();
    Poly a = g * g * u, b = g * v;
    Poly r = gcd(a, b);
    CHECK(divide_exact(r, g).has_value());
    CHECK(gcd(a / r, b / r).is_one());
    CHECK(gcd(b, a) == r);
  }
}
