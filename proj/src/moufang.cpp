#include "mixf4/moufang.hpp"

#include "mixf4/chevalley.hpp"

namespace mixf4 {

namespace {

const Field& field_of(const Octonion& x) {
  if (!x.field) throw std::invalid_argument("octonion without a field");
  return *x.field;
}

}  // namespace

Octonion Octonion::zero(const Field& f) {
  return {&f, {f.zero(), f.zero(), f.zero(), f.zero()}};
}

Octonion Octonion::one(const Field& f) {
  return {&f, {f.one(), f.zero(), f.zero(), f.zero()}};
}

Octonion Octonion::of(const Field& f, QuadExtElem x1, QuadExtElem x2, QuadExtElem x3, QuadExtElem x4) {
  return {&f, {std::move(x1), std::move(x2), std::move(x3), std::move(x4)}};
}

bool Octonion::is_zero() const {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

Octonion Octonion::conj() const {
  Octonion r = *this;
  r.x[0] = x[0].conj();
  return r;
}

QuadExtElem Octonion::norm() const {
  const Field& f = field_of(*this);
  auto n = [&](const QuadExtElem& c) { return f.embed(c.norm()); };
  const QuadExtElem al = f.alpha(), be = f.beta();
  return n(x[0]) + al * n(x[1]) + be * n(x[2]) + al * be * n(x[3]);
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r = a;
  if (!r.field) r.field = b.field;
  for (int i = 0; i < 4; ++i) r.x[i] += b.x[i];
  return r;
}

std::string Octonion::to_string() const {
  return "(" + x[0].to_string() + ", " + x[1].to_string() + ", " + x[2].to_string() + ", " +
         x[3].to_string() + ")";
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
  const Field& f = field_of(x);
  const QuadExtElem al = f.alpha(), be = f.beta();
  const auto& [x1, x2, x3, x4] = x.x;
  const auto& [y1, y2, y3, y4] = y.x;
  return Octonion::of(f,
                      x1 * y1 + al * x2.conj() * y2 + be * x3.conj() * y3 + al * be * x4 * y4.conj(),
                      x2 * y1 + x1.conj() * y2 + be * x4 * y3.conj() + be * x3.conj() * y4,
                      x3 * y1 + x1.conj() * y3 + al * x4 * y2.conj() + al * x2.conj() * y4,
                      x3 * y2 + x2 * y3 + x4 * y1.conj() + x1 * y4);
}

Octonion oct_inv(const Octonion& x) {
  QuadExtElem n = x.norm();
  if (n.is_zero()) {
    if (x.is_zero()) throw DivisionByZero();
    throw IsotropicVector("norm vanishes on the nonzero vector " + x.to_string());
  }
  QuadExtElem s = n.inverse();
  Octonion c = x.conj();
  for (auto& e : c.x) e = e * s;
  return c;
}

Octonion f_map(const Octonion& a) {
  const Field& f = field_of(a);
  const QuadExtElem al = f.alpha(), be = f.beta();
  const auto& [a1, a2, a3, a4] = a.x;
  return Octonion::of(f, a.norm(), a1 * a2 + be * a3.conj() * a4, a1 * a3 + al * a2.conj() * a4,
                      a2 * a3 + a1.conj() * a4);
}

QuadExtElem g_form(const Octonion& a, const Octonion& c) {
  const Field& f = field_of(a);
  const QuadExtElem al = f.alpha(), be = f.beta();
  return a.x[0].conj() * c.x[0] + al * a.x[1].conj() * c.x[1] + be * a.x[2].conj() * c.x[2] +
         al * be * a.x[3] * c.x[3].conj();
}

// ---------------------------------------------------------------------------

QuadExtElem UElem::defect() const {
  return a.norm() + field_of(a).embed(b.x[0].trace());
}

void UElem::validate() const {
  for (int i = 1; i < 4; ++i)
    if (!b.x[i].in_K()) throw FieldViolation("b component outside K: " + b.x[i].to_string());
  if (!defect().is_zero()) throw NormViolation("N(a) + tr(b) != 0 for " + to_string());
}

std::string UElem::to_string() const { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

UElem u_zero(const Field& f) { return {Octonion::zero(f), Octonion::zero(f)}; }

UElem u_add(const UElem& p, const UElem& q) {
  UElem r{p.a + q.a, p.b + q.b};
  r.b.x[0] += g_form(p.a, q.a);
  return r;
}

UElem u_neg(const UElem& p) {
  UElem r = p;
  r.b.x[0] += g_form(p.a, p.a);
  return r;
}

UElem tau(const UElem& p) {
  if (p.is_zero()) throw IdentityInput();
  const Octonion y = oct_inv(p.b + f_map(p.a));
  const Octonion ay = oct_mul(p.a, y);
  return {ay, y + f_map(ay)};
}

U1Elem to_u1(const UElem& p) {
  const auto& a = p.a.x;
  const auto& b = p.b.x;
  return {b[0], b[1], b[2], b[3], a[0], a[1], a[2], a[3]};
}

UElem from_u1(const U1Elem& u) {
  const Field& f = *u.t2.field();
  return {Octonion::of(f, u.t8, u.t10, u.t12, u.t15), Octonion::of(f, u.t1, u.t2, u.t4, u.t6)};
}

// ---------------------------------------------------------------------------

namespace {

void require_algebraic(const UElem& p) {
  if (field_of(p.a).mixed()) throw ModeError("this map is defined in algebraic mode only");
}

}  // namespace

UElem phi(const UElem& p) {
  require_algebraic(p);
  return {p.a, p.b + f_map(p.a)};
}

UElem tilde_add(const UElem& p, const UElem& q) {
  require_algebraic(p);
  return {p.a + q.a, p.b + q.b + oct_mul(q.a.conj(), p.a)};
}

UElem tilde_tau(const UElem& p) {
  require_algebraic(p);
  if (p.is_zero()) throw IdentityInput();
  const Octonion yi = oct_inv(p.b);
  return {oct_mul(p.a, yi), yi};
}

}  // namespace mixf4
