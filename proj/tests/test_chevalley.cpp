#include <random>

#include "doctest.h"
#include "mixf4/chevalley.hpp"

using namespace mixf4;

namespace {

const RootSystem& R() { return RootSystem::f4(); }
int e4() { return R().index(Root{{0, 0, 0, 2}}); }

}  // namespace

TEST_CASE("structure constants over Z") {
  const auto& sc = StructureConstants::f4();
  CHECK(sc.check_magnitudes());
  CHECK(sc.antisymmetry_failures() == 0);
  CHECK(sc.jacobi_failures() == 0);
  // flipping a single sign is detected
  auto table = sc.table();
  int a = R().fundamental(0), b = R().fundamental(1);
  REQUIRE(table[a][b] != 0);
  table[a][b] = -table[a][b];
  CHECK(StructureConstants::from_table(table).jacobi_failures() > 0);
}

TEST_CASE("column of e_{-r} under u_r(t)") {
  Field f(FieldSpec::default_mixed());
  QuadExtElem t = f.parse("t + a*g");
  for (int r = 0; r < RootSystem::kNumRoots; ++r) {
    if (R().is_long(r)) continue;
    GroupMatrix g = gen_u(f, r, t);
    CHECK(g.entry(r, R().neg(r)) == t.square());
    CHECK(g.entry(R().neg(r), R().neg(r)) == f.one());
    CHECK(g.entry(r, r) == f.one());
  }
}

TEST_CASE("one-parameter subgroups") {
  Field f(FieldSpec::default_mixed());
  QuadExtElem s = f.parse("d + t^2*g"), t = f.parse("a/b + g");
  for (int r : {e4(), R().u_root(8), R().fundamental(2)}) {
    CHECK(gen_u(f, r, f.zero()) == GroupMatrix::identity(f));
    CHECK(gen_u(f, r, s) * gen_u(f, r, s) == GroupMatrix::identity(f));
    CHECK(gen_u(f, r, s) * gen_u(f, r, t) == gen_u(f, r, s + t));
    CHECK(gen_h(f, r, f.one()) == GroupMatrix::identity(f));
    CHECK(gen_h(f, r, s) * gen_h(f, r, t) == gen_h(f, r, s * t));
    CHECK(gen_h(f, r, t) == gen_h_diag(f, r, t));
  }
  CHECK(gen_n(f, e4(), f.one()) * gen_n(f, e4(), f.one()) == GroupMatrix::identity(f));
  CHECK_THROWS_AS(gen_u(f, R().u_root(2), f.parse("t")), FieldViolation);
  CHECK_NOTHROW(gen_u(f, e4(), f.parse("t")));
}

TEST_CASE("commutator relations on a few pairs") {
  Field f(FieldSpec::default_mixed());
  QuadExtElem x = f.parse("d + g"), y = f.parse("a*t^2");
  for (int r = 0; r < RootSystem::kNumRoots; r += 5)
    for (int s = 0; s < RootSystem::kNumRoots; s += 3) {
      if (s == r || s == R().neg(r)) continue;
      QuadExtElem cx = R().is_long(r) ? y : x, cy = R().is_long(s) ? y + f.one() : x.square();
      CAPTURE(r);
      CAPTURE(s);
      CHECK(check_commutator(f, r, s, cx, cy));
    }
}

TEST_CASE("subgroup membership") {
  Field f(FieldSpec::default_mixed());
  GroupMatrix id = GroupMatrix::identity(f);
  CHECK(in_parabolic_PJ(id));
  CHECK(in_UJ(id));
  CHECK(in_UJ_minus(id));
  GroupMatrix u = gen_u(f, R().u_root(1), f.parse("d"));
  CHECK(in_UJ(u));
  CHECK_FALSE(in_UJ_minus(u));
  CHECK(in_parabolic_PJ(u));
  CHECK_FALSE(in_parabolic_PJ(gen_n(f, e4(), f.one())));
  CHECK(in_parabolic_PJ(gen_u(f, R().fundamental(1), f.parse("a + g"))));
  CHECK(in_parabolic_PJ(gen_h(f, e4(), f.parse("a + g"))));
}

TEST_CASE("root vectors generating the Lie algebra mod 2") {
  const auto& gens = lie_generators_mod2();
  CHECK(closure_dim_mod2(gens) == kDim);
  CHECK(gens.size() < 12);
  // short root vectors alone miss the long ones: [e_s, e_s'] = 2 e_{s+s'}
  std::vector<int> shorts;
  for (int r = 0; r < RootSystem::kNumRoots; ++r)
    if (R().is_short(r)) shorts.push_back(r);
  CHECK(closure_dim_mod2(shorts) < kDim);
  CHECK(closure_dim_mod2({}) == 0);
}
