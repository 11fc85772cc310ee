#include "doctest.h"
#include "mixf4/involution.hpp"

using namespace mixf4;

namespace {

const RootSystem& R() { return RootSystem::f4(); }

std::vector<int> b3_roots() {
  std::vector<int> out;
  for (int r = 0; r < RootSystem::kNumRoots; ++r)
    if (R().in_levi(r)) out.push_back(r);
  return out;
}

}  // namespace

TEST_CASE("coefficient table for r1..r15") {
  Field f(FieldSpec::default_mixed());
  CoeffTable c = compute_coeffs(f);
  const char* expected[15] = {"1",     "a",   "1/a", "b",   "1/b",       "a*b", "1/(a*b)", "1",
                              "1",     "a",   "1/a", "b",   "1/b",       "1/(a*b)", "a*b"};
  for (int k = 1; k <= 15; ++k) {
    CAPTURE(k);
    CHECK(c[R().u_root(k)] == f.parse(expected[k - 1]));
  }
  CHECK(c.involutive());
  CHECK(c.compatible_with_commutators());
  for (int r = 0; r < RootSystem::kNumRoots; ++r) CHECK((c[r] * c[R().neg(r)]).is_one());
  // seeds
  CHECK(c[R().fundamental(0)] == f.parse("1/(a*b)"));
  CHECK(c[R().fundamental(1)] == f.parse("a*b"));
  CHECK(c[R().fundamental(2)] == f.parse("1/a"));
  CHECK(c[R().fundamental(3)] == f.parse("a/b"));
}

TEST_CASE("coefficient table under other constants") {
  Field f(FieldSpec::default_mixed());
  for (const char* ab : {"d^2+a|b*t^2", "1|a+1", "d*t^2/(b+1)|a*b+d"}) {
    std::string s(ab);
    auto bar = s.find('|');
    CoeffTable c = compute_coeffs(f, f.parse(s.substr(0, bar)), f.parse(s.substr(bar + 1)));
    CHECK(c.involutive());
    CHECK(c.compatible_with_commutators());
  }
}

TEST_CASE("sigma on words is an involution") {
  Field f(FieldSpec::default_mixed());
  CoeffTable c = compute_coeffs(f);
  Word w = {Atom::u(R().u_root(1), f.parse("t + g")), Atom::h(R().fundamental(2), f.parse("a + g")),
            Atom::u(R().neg(R().u_root(6)), f.parse("d")),
            Atom::n(R().fundamental(0), f.parse("t*g + 1"))};
  CHECK(sigma_word(Word{}, c).empty());
  CHECK(evaluate(f, sigma_word(sigma_word(w, c), c)) == evaluate(f, w));
  Atom a = sigma_atom(Atom::u(R().fundamental(1), f.parse("t + g")), c);
  CHECK(a.root == R().neg(R().fundamental(1)));
  CHECK(a.coeff == f.parse("a*b*(t + g + 1)"));
}

TEST_CASE("sigma maps commutator relations to relations") {
  Field f(FieldSpec::default_mixed());
  CoeffTable c = compute_coeffs(f);
  QuadExtElem xs = f.parse("t + a*g"), xl = f.parse("d + g*t^2");
  for (int r = 0; r < RootSystem::kNumRoots; r += 3)
    for (int s = 1; s < RootSystem::kNumRoots; s += 4) {
      if (s == r || s == R().neg(r)) continue;
      int rs = R().sum(r, s);
      if (rs < 0) continue;
      QuadExtElem x = R().is_long(r) ? xl : xs, y = R().is_long(s) ? xl : xs;
      // the image of a relation instance is again a relation instance
      Atom a = sigma_atom(Atom::u(r, x), c), b = sigma_atom(Atom::u(s, y), c);
      CHECK(check_commutator(f, a.root, b.root, a.coeff, b.coeff));
    }
}

TEST_CASE("B3 generators preserve R and have mixed shape") {
  Field f(FieldSpec::default_mixed());
  for (int r : b3_roots()) {
    QuadExtElem t = R().is_long(r) ? f.parse("a*t^2 + d*g") : f.parse("t + b*g");
    Mat7 m = b3_generator(f, r, t);
    CAPTURE(R().name(r));
    CHECK(preserves_R(m));
    CHECK(has_mixed_shape(m));
    CHECK(b3_generator(f, r, f.zero()) == Mat7::identity(f));
  }
  Mat7 bad = Mat7::identity(f);
  bad.at(1, 2) = f.one();
  CHECK_FALSE(preserves_R(bad));
  CHECK(preserves_R(Mat7::identity(f)));
  int e2 = R().index(Root{{0, 2, 0, 0}});
  Mat7 u = b3_generator(f, e2, f.parse("t"));
  CHECK(u.at(0, -2) == f.parse("t"));
  CHECK(u.at(2, -2) == f.parse("t^2"));
  int e1me2 = R().index(Root{{2, -2, 0, 0}});
  Mat7 v = b3_generator(f, e1me2, f.parse("d"));
  CHECK(v.at(1, 2) == f.parse("d"));
  CHECK(v.at(-2, -1) == f.parse("d"));
}

TEST_CASE("S and M") {
  Field f(FieldSpec::default_mixed());
  Mat7 s = matrix_S(f);
  auto sinv = s.inverse();
  REQUIRE(sinv.has_value());
  CHECK(s.conj() * *sinv == matrix_M(f));
  CHECK(matrix_M(f) * matrix_M(f) == Mat7::identity(f));
  Mat7 pulled = s.transpose() * form_R(f) * s;
  CHECK(same_quadratic_form(pulled, form_Q(f)));
  CHECK_FALSE(pulled == form_Q(f));
}

TEST_CASE("sigma on B3 matches sigma on words") {
  Field f(FieldSpec::default_mixed());
  CoeffTable c = compute_coeffs(f);
  const char* samples[] = {"t + g", "d*g + a", "1", "t^3/(b+1) + a*g", "g/d"};
  for (int r : b3_roots()) {
    for (const char* smp : samples) {
      QuadExtElem t = f.parse(smp);
      if (R().is_long(r)) t = t.square();  // K-coefficient
      Mat7 lhs = sigma_b3(b3_generator(f, r, t));
      Atom a = sigma_atom(Atom::u(r, t), c);
      CAPTURE(R().name(r));
      CHECK(lhs == b3_generator(f, a.root, a.coeff));
    }
  }
}

TEST_CASE("flags") {
  Field f(FieldSpec::default_mixed());
  for (int r : b3_roots()) {
    if (!R().is_positive(r)) continue;
    QuadExtElem t = R().is_long(r) ? f.parse("a + t^2*g") : f.parse("t + g");
    Mat7 m = b3_generator(f, r, t);
    CAPTURE(R().name(r));
    CHECK(fixes_flag(m, 1));
    CHECK(fixes_flag(sigma_b3(m), -1));
  }
  int neg = R().neg(R().fundamental(3));
  CHECK_FALSE(fixes_flag(b3_generator(f, neg, f.one()), 1));
}
