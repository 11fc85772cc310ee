#ifndef MIXF4_MOUFANG_HPP_
#define MIXF4_MOUFANG_HPP_

#include <array>
#include <stdexcept>
#include <string>

#include "mixf4/field.hpp"
#include "mixf4/rewrite.hpp"

namespace mixf4 {

class ModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A nonzero vector of norm zero: the chosen constants do not give an
// anisotropic form.
class IsotropicVector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// x = (x1, x2, x3, x4) in L^4 with norm x1 x1' + alpha x2 x2' + beta x3 x3'
// + alpha beta x4 x4' (' = conjugation of L).
struct Octonion {
  const Field* field = nullptr;
  std::array<QuadExtElem, 4> x;

  static Octonion zero(const Field& f);
  static Octonion one(const Field& f);
  static Octonion of(const Field& f, QuadExtElem x1, QuadExtElem x2, QuadExtElem x3, QuadExtElem x4);

  bool is_zero() const;
  Octonion conj() const;  // (conj x1, x2, x3, x4)
  QuadExtElem norm() const;
  friend Octonion operator+(const Octonion& a, const Octonion& b);
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.x == b.x; }
  std::string to_string() const;
};

Octonion oct_mul(const Octonion& x, const Octonion& y);
// x^-1 = conj(x) / N(x).  Throws IsotropicVector when N(x) = 0, x != 0.
Octonion oct_inv(const Octonion& x);

// f(a) = (N(a), a1 a2 + beta conj(a3) a4, a1 a3 + alpha conj(a2) a4, a2 a3 + conj(a1) a4)
Octonion f_map(const Octonion& a);
// conj(a1) c1 + alpha conj(a2) c2 + beta conj(a3) c3 + alpha beta a4 conj(c4)
QuadExtElem g_form(const Octonion& a, const Octonion& c);

// (a, b) with a in L^4, b in L + K^3 and N(a) + tr(b1) = 0.
struct UElem {
  Octonion a;
  Octonion b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const UElem& p, const UElem& q) = default;
  QuadExtElem defect() const;  // N(a) + tr(b1)
  // Throws NormViolation / FieldViolation.
  void validate() const;
  std::string to_string() const;
};

UElem u_zero(const Field& f);
UElem u_add(const UElem& p, const UElem& q);
UElem u_neg(const UElem& p);  // (a, b + g(a, a))

// tau(a, b) = (a y^-1, y^-1 + f(a y^-1)) with y = b + f(a).
// Throws IdentityInput for (0, 0).
UElem tau(const UElem& p);

// Identification with U^1: a = (t8, t10, t12, t15), b = (t1, t2, t4, t6).
U1Elem to_u1(const UElem& p);
UElem from_u1(const U1Elem& u);

// Algebraic case (K = L) only; ModeError otherwise.
UElem phi(const UElem& p);  // (a, b + f(a))
UElem tilde_add(const UElem& p, const UElem& q);  // (x1 + x2, y1 + y2 + conj(x2) x1)
UElem tilde_tau(const UElem& p);  // (x y^-1, y^-1)

}  // namespace mixf4

#endif  // MIXF4_MOUFANG_HPP_
