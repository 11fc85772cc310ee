#include "doctest.h"
#include "mixf4/moufang.hpp"
#include "mixf4/sample.hpp"

using namespace mixf4;

namespace {

SampleShape light() { return {1, 1, false}; }

Octonion random_oct(const Field& f, Sampler& s) { return Octonion::of(f, s.L(), s.L(), s.L(), s.L()); }

UElem random_u(Sampler& s) { return from_u1(s.u1(static_cast<int>(s.engine()() % 7))); }

}  // namespace

TEST_CASE("octonion algebra") {
  Field f(FieldSpec::default_mixed());
  Sampler s(f, 17, light());
  const Octonion one = Octonion::one(f);
  for (int i = 0; i < 10; ++i) {
    Octonion x = random_oct(f, s), y = random_oct(f, s);
    Octonion xy = oct_mul(x, y);
    CHECK(oct_mul(one, x) == x);
    CHECK(oct_mul(x, one) == x);
    CHECK(oct_mul(x, x.conj()) == Octonion::of(f, x.norm(), f.zero(), f.zero(), f.zero()));
    CHECK(xy.norm() == x.norm() * y.norm());
    CHECK(oct_mul(x, y).conj().norm() == xy.norm());
    if (x.is_zero() || y.is_zero()) continue;
    Octonion xi = oct_inv(x);
    CHECK(oct_mul(x, xi) == one);
    CHECK(oct_mul(xi, x) == one);
    // alternative laws
    CHECK(oct_mul(xi, xy) == y);
    CHECK(oct_mul(xy, oct_inv(y)) == x);
  }
  CHECK_THROWS_AS(oct_inv(Octonion::zero(f)), DivisionByZero);
}

TEST_CASE("isotropic vectors are reported") {
  // With alpha = 1 the form x1 x1' + x2 x2' is isotropic: (1, 1, 0, 0).
  FieldSpec spec = FieldSpec::default_mixed();
  spec.alpha = RatFunc::one();
  Field f(spec);
  Octonion x = Octonion::of(f, f.one(), f.one(), f.zero(), f.zero());
  CHECK(x.norm().is_zero());
  CHECK_THROWS_AS(oct_inv(x), IsotropicVector);
}

TEST_CASE("f and g") {
  Field f(FieldSpec::default_mixed());
  Sampler s(f, 2, light());
  CHECK(f_map(Octonion::zero(f)).is_zero());
  for (int i = 0; i < 10; ++i) {
    Octonion a = random_oct(f, s);
    CHECK(f_map(a).x[0] == a.norm());
    CHECK(g_form(a, a) == a.norm());
    CHECK(g_form(a, a).trace().is_zero());
  }
}

TEST_CASE("U is a group") {
  Field f(FieldSpec::default_mixed());
  Sampler s(f, 4, light());
  const UElem zero = u_zero(f);
  for (int i = 0; i < 10; ++i) {
    UElem p = random_u(s), q = random_u(s), r = random_u(s);
    p.validate();
    CHECK(u_add(p, zero) == p);
    CHECK(u_add(zero, p) == p);
    CHECK(u_add(p, u_neg(p)) == zero);
    CHECK(u_add(u_neg(p), p) == zero);
    CHECK(u_add(u_add(p, q), r) == u_add(p, u_add(q, r)));
    CHECK_NOTHROW(u_add(p, q).validate());
  }
}

TEST_CASE("tau is an involution") {
  Field f(FieldSpec::default_mixed());
  Sampler s(f, 6, light());
  for (int i = 0; i < 20; ++i) {
    UElem p = random_u(s);
    UElem t = tau(p);
    CHECK_NOTHROW(t.validate());
    CHECK(tau(t) == p);
  }
  CHECK_THROWS_AS(tau(u_zero(f)), IdentityInput);
}

TEST_CASE("identification with U^1") {
  Field f(FieldSpec::default_mixed());
  Sampler s(f, 8, light());
  for (int st = 0; st < Sampler::kStrata; ++st) {
    U1Elem u = s.u1(st);
    CHECK(to_u1(from_u1(u)) == u);
    CHECK(from_u1(u).defect().is_zero());
  }
}

TEST_CASE("algebraic mode: phi intertwines the two descriptions") {
  Field f(FieldSpec::default_algebraic());
  Sampler s(f, 10, light());
  for (int i = 0; i < 10; ++i) {
    UElem p = random_u(s), q = random_u(s);
    CHECK(phi(u_add(p, q)) == tilde_add(phi(p), phi(q)));
    CHECK(phi(tau(p)) == tilde_tau(phi(p)));
  }
}

TEST_CASE("algebraic-only maps refuse mixed fields") {
  Field f(FieldSpec::default_mixed());
  Sampler s(f, 12, light());
  UElem p = random_u(s);
  CHECK_THROWS_AS(phi(p), ModeError);
  CHECK_THROWS_AS(tilde_add(p, p), ModeError);
  CHECK_THROWS_AS(tilde_tau(p), ModeError);
}
