#include <set>

#include "doctest.h"
#include "mixf4/involution.hpp"
#include "mixf4/moufang.hpp"
#include "mixf4/rewrite.hpp"
#include "mixf4/sample.hpp"

using namespace mixf4;

namespace {

const RootSystem& R() { return RootSystem::f4(); }

SampleShape light() { return {1, 1, false}; }

int random_root(std::mt19937_64& g) { return static_cast<int>(g() % RootSystem::kNumRoots); }

bool same(const Field& f, const Word& a, const Word& b) { return evaluate(f, a) == evaluate(f, b); }

Word word_of(const std::array<QuadExtElem, 16>& c) {
  Word w;
  for (int k = 1; k <= 15; ++k)
    if (!c[k].is_zero()) w.push_back(Atom::u(R().u_root(k), c[k]));
  return w;
}

}  // namespace

TEST_CASE("rules preserve the group element") {
  Field f(FieldSpec::default_mixed());
  Sampler s(f, 11, light());
  auto& g = s.engine();

  SUBCASE("swap_n") {
    for (int i = 0; i < 20; ++i) {
      Atom n = Atom::n(random_root(g), i % 2 ? f.one() : s.nonzero_L());
      Atom x = i % 3 ? Atom::u(random_root(g), s.nonzero_L()) : Atom::h(random_root(g), s.nonzero_L());
      CAPTURE(n.to_string());
      CAPTURE(x.to_string());
      CHECK(same(f, swap_n(n, x), {n, x}));
    }
  }
  SUBCASE("swap_h") {
    for (int i = 0; i < 20; ++i) {
      Atom x = Atom::u(random_root(g), s.nonzero_L());
      Atom h = Atom::h(random_root(g), s.nonzero_L());
      CAPTURE(x.to_string());
      CAPTURE(h.to_string());
      CHECK(same(f, swap_h(x, h), {x, h}));
    }
  }
  SUBCASE("swap_comm") {
    int done = 0;
    while (done < 20) {
      int r = random_root(g), q = random_root(g);
      if (q == r || q == R().neg(r)) continue;
      // make sure most pairs actually have a commutator
      if (done < 15 && R().sum(r, q) < 0) continue;
      Atom x = Atom::u(r, s.nonzero_L()), y = Atom::u(q, s.nonzero_L());
      CAPTURE(x.to_string());
      CAPTURE(y.to_string());
      CHECK(same(f, swap_comm(x, y), {x, y}));
      ++done;
    }
  }
  SUBCASE("split_opposite") {
    for (int i = 0; i < 20; ++i) {
      int r = random_root(g);
      QuadExtElem t = s.nonzero_L();
      QuadExtElem u = i % 5 == 0 ? t.inverse() : s.nonzero_L();
      Atom x = Atom::u(r, t), y = Atom::u(R().neg(r), u);
      CAPTURE(x.to_string());
      CAPTURE(y.to_string());
      CHECK(same(f, split_opposite(x, y), {x, y}));
    }
  }
}

TEST_CASE("rules reject malformed input") {
  Field f(FieldSpec::default_mixed());
  Atom x = Atom::u(R().u_root(1), f.one());
  CHECK_THROWS_AS(swap_comm(x, x), std::invalid_argument);
  CHECK_THROWS_AS(swap_comm(x, Atom::u(R().neg(x.root), f.one())), std::invalid_argument);
  CHECK_THROWS_AS(split_opposite(x, x), std::invalid_argument);
  CHECK_THROWS_AS(swap_n(x, x), std::invalid_argument);
  CHECK_THROWS_AS(swap_h(x, x), std::invalid_argument);
}

TEST_CASE("canonical words and collection") {
  Field f(FieldSpec::default_mixed());
  CoeffTable c = compute_coeffs(f);
  Sampler s(f, 3, light());
  for (int st = 0; st < Sampler::kStrata; ++st) {
    CAPTURE(st);
    U1Elem u = s.u1(st);
    Word w = canonical_word(u);
    CHECK(sigma_fixed(f, w, c));
    CHECK(in_UJ(evaluate(f, w)));
    CHECK(collect(f, w) == u.coefficients());
  }
  // out of order products collect to the same matrix
  for (int i = 0; i < 4; ++i) {
    Word w = canonical_word(s.u1(0));
    Word v = canonical_word(s.u1(6));
    Word both = concat(v, w);
    std::reverse(both.begin(), both.end());
    CHECK(same(f, word_of(collect(f, both)), both));
  }
  SUBCASE("Levi elements do not collect away") {
    int levi = 0;
    while (!R().in_levi(levi)) ++levi;
    CHECK_THROWS_AS(collect(f, {Atom::u(levi, f.one())}), RewriteError);
  }
}

TEST_CASE("tau normal form on each stratum") {
  Field f(FieldSpec::default_mixed());
  CoeffTable c = compute_coeffs(f);
  Sampler s(f, 21, light());
  for (int st : {1, 3, 4, 5}) {
    CAPTURE(st);
    U1Elem u = s.u1(st);
    RewriteResult r = tau_normal_form(u);
    Word g = conjugated_word(u);
    r.uprime.validate();
    CHECK_FALSE(r.uprime.is_identity());
    CHECK(unique_decomposition_check(f, g, r));
    CHECK(in_parabolic_PJ(evaluate(f, r.b)));
    CHECK(sigma_fixed(f, r.b, c));
    CHECK(tau_normal_form(r.uprime).uprime == u);
  }
  // the remaining strata against the closed formula
  for (int st : {2, 6}) {
    CAPTURE(st);
    U1Elem u = s.u1(st);
    CHECK(from_u1(tau_normal_form(u).uprime) == tau(from_u1(u)));
  }
}

TEST_CASE("trace records every rule application") {
  Field f(FieldSpec::default_mixed());
  Sampler s(f, 5, light());
  RewriteOptions o;
  o.trace = true;
  RewriteResult r = tau_normal_form(s.u1(1), o);
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace.size() <= r.steps);
  const std::set<std::string> rules = {"first_move", "move_h", "move_u", "swap_h", "merge", "swap_comm",
                                       "split_opposite"};
  for (const TraceStep& t : r.trace) {
    CAPTURE(t.rule);
    CHECK(rules.count(t.rule) == 1);
  }
  RewriteResult plain = tau_normal_form(s.u1(1));
  CHECK(plain.trace.empty());
}

TEST_CASE("errors") {
  Field f(FieldSpec::default_mixed());
  CHECK_THROWS_AS(tau_normal_form(zero_u1(f)), IdentityInput);
  U1Elem bad = zero_u1(f);
  bad.t8 = f.one();
  CHECK_THROWS_AS(tau_normal_form(bad), NormViolation);
  Sampler s(f, 8, light());
  RewriteOptions o;
  o.step_bound = 3;
  CHECK_THROWS_AS(tau_normal_form(s.u1(1), o), RewriteError);
}

TEST_CASE("equality on generating columns agrees with full evaluation") {
  Field f(FieldSpec::default_mixed());
  Sampler s(f, 31, light());
  auto& g = s.engine();
  for (int i = 0; i < 20; ++i) {
    Word w;
    for (int k = 0; k < 6; ++k) {
      int r = random_root(g);
      QuadExtElem c = R().is_long(r) ? f.parse("d + t") : s.nonzero_L();
      w.push_back(k % 3 == 2 ? Atom::h(r, s.nonzero_L()) : k % 3 == 1 ? Atom::n(r, c) : Atom::u(r, c));
    }
    Word w2 = w;
    int r = random_root(g);
    w2.push_back(Atom::u(r, R().is_long(r) ? f.one() : s.nonzero_L()));
    const GroupMatrix m = evaluate(f, w), m2 = evaluate(f, w2);
    CAPTURE(to_string(w));
    CHECK(evaluates_to(f, w, m));
    CHECK(evaluates_to(f, w2, m) == (m2 == m));
    CHECK_FALSE(evaluates_to(f, w2, m));
  }
}
