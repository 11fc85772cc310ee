#include "doctest.h"
#include "mixf4/roots.hpp"

using namespace mixf4;

namespace {

const RootSystem& R() { return RootSystem::f4(); }
int idx(int a, int b, int c, int d) { return R().index(Root{{a, b, c, d}}); }
int alpha(int i) { return R().fundamental(i - 1); }

}  // namespace

TEST_CASE("root counts") {
  int pos = 0, pos_levi = 0, pos_grade = 0, longs = 0;
  for (int i = 0; i < RootSystem::kNumRoots; ++i) {
    pos += R().is_positive(i);
    pos_levi += R().is_positive(i) && R().in_levi(i);
    pos_grade += R().root(i).grade() > 0;
    longs += R().is_long(i);
    CHECK((R().is_positive(i) && !R().in_levi(i)) == (R().root(i).grade() > 0));
  }
  CHECK(pos == 24);
  CHECK(pos_levi == 9);
  CHECK(pos_grade == 15);
  CHECK(longs == 24);
  for (int k = 1; k <= 15; ++k) {
    CHECK(R().root(R().u_root(k)).grade() > 0);
    CHECK(R().u_index(R().u_root(k)) == k);
  }
}

TEST_CASE("fundamental roots and expansions") {
  CHECK(alpha(1) == idx(-1, -1, -1, 1));
  CHECK(alpha(2) == idx(0, 0, 2, 0));
  CHECK(R().expansion(alpha(2)) == std::array<int, 4>{0, 1, 0, 0});
  CHECK(R().expansion(idx(1, 1, 1, 1)) == std::array<int, 4>{1, 3, 2, 1});
  CHECK(R().expansion(idx(0, 0, 0, 2)) == std::array<int, 4>{2, 3, 2, 1});
  for (int i = 0; i < RootSystem::kNumRoots; ++i) {
    // partial sums along the build chain are roots
    Root cur;
    int sign = R().is_positive(i) ? 1 : -1;
    for (int k : R().build_chain(i)) {
      cur = cur + sign * R().root(R().fundamental(k));
      CHECK(R().is_root(cur));
    }
    CHECK(cur == R().root(i));
  }
}

TEST_CASE("reflections") {
  int e4 = idx(0, 0, 0, 2);
  CHECK(R().reflect(e4, e4) == R().neg(e4));
  CHECK(R().reflect(e4, idx(2, 0, 0, 2)) == idx(2, 0, 0, -2));
  CHECK(R().reflect(alpha(3), alpha(2)) == idx(0, 2, 0, 0));
  for (int s = 0; s < RootSystem::kNumRoots; ++s)
    for (int r = 0; r < RootSystem::kNumRoots; ++r) {
      int w = R().reflect(s, r);
      REQUIRE(w >= 0);
      CHECK(R().reflect(s, w) == r);
    }
}

TEST_CASE("sigma on roots") {
  CHECK(R().sigma(alpha(1)) == idx(1, 1, 1, 1));
  CHECK(R().sigma(alpha(2)) == R().neg(alpha(2)));
  int e4 = idx(0, 0, 0, 2);
  CHECK(R().sigma(e4) == e4);
  for (int i = 0; i < RootSystem::kNumRoots; ++i) {
    CHECK(R().sigma(R().sigma(i)) == i);
    if (R().in_levi(i)) CHECK(R().is_positive(i) != R().is_positive(R().sigma(i)));
    if (R().root(i).grade() > 0) CHECK(R().root(R().sigma(i)).grade() > 0);
  }
  // r1 fixed; r2..r15 in consecutive pairs
  CHECK(R().sigma(R().u_root(1)) == R().u_root(1));
  for (int k = 2; k <= 14; k += 2) CHECK(R().sigma(R().u_root(k)) == R().u_root(k + 1));
}

TEST_CASE("root strings") {
  // e3 + (e2 - e3) = e2 is a root, 2e2 - e3 is not
  CHECK(R().root_string(alpha(3), alpha(2)) == std::pair{0, 1});
  // e2 - e3 + e3 = e2, + 2 e3 = e2 + e3
  CHECK(R().root_string(alpha(2), alpha(3)) == std::pair{0, 2});
  CHECK(R().root_string(alpha(1), alpha(4)) == std::pair{0, 0});
  CHECK_THROWS_AS(R().root_string(alpha(1), R().neg(alpha(1))), LinearlyDependent);
}

TEST_CASE("short plus long") {
  for (int r = 0; r < RootSystem::kNumRoots; ++r)
    for (int s = 0; s < RootSystem::kNumRoots; ++s) {
      int rs = R().sum(r, s);
      if (rs < 0) continue;
      if (R().is_long(r) && R().is_long(s)) CHECK(R().is_long(rs));
      if (R().is_short(r) && R().is_long(s)) {
        CHECK(R().is_short(rs));
        int t = R().sum(r, rs);
        REQUIRE(t >= 0);
        CHECK(R().is_long(t));
      }
    }
}

TEST_CASE("long roots have even short coefficients") { CHECK(verify_lemma_long()); }

TEST_CASE("names") {
  CHECK(R().name(idx(2, 0, 0, 2)) == "e1+e4");
  CHECK(R().name(idx(-1, -1, -1, 1)) == "(-e1-e2-e3+e4)/2");
  CHECK(R().root(0).to_string().front() == '(');
}
