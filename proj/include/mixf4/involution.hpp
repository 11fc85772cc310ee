#ifndef MIXF4_INVOLUTION_HPP_
#define MIXF4_INVOLUTION_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mixf4/field.hpp"
#include "mixf4/word.hpp"

namespace mixf4 {

// c_r for all 48 roots, so that sigma(u_r(t)) = u_{sigma(r)}(c_r conj(t)).
class CoeffTable {
 public:
  const QuadExtElem& operator[](int r) const { return c_[r]; }
  const std::vector<QuadExtElem>& values() const { return c_; }

  // conj(c_r) c_{sigma(r)} = 1 for every root.
  bool involutive() const;
  // c_r c_s = c_{r+s} (and c_r^2 c_s = c_{2r+s}) along the nontrivial
  // commutator relations.
  bool compatible_with_commutators() const;

 private:
  friend CoeffTable compute_coeffs(const Field& f, const QuadExtElem& alpha,
                                   const QuadExtElem& beta);
  std::vector<QuadExtElem> c_;
};

// Seeds c_{a1} = 1/(alpha beta), c_{a2} = alpha beta, c_{a3} = 1/alpha,
// c_{a4} = alpha/beta, extended multiplicatively along build chains to the
// positive roots, then to the negative ones.
CoeffTable compute_coeffs(const Field& f, const QuadExtElem& alpha, const QuadExtElem& beta);
CoeffTable compute_coeffs(const Field& f);  // the field's own alpha, beta

Atom sigma_atom(const Atom& a, const CoeffTable& c);
Word sigma_word(const Word& w, const CoeffTable& c);

// ---------------------------------------------------------------------------
// The B3 subgroup as 7x7 matrices acting on L + K^6 with coordinates
// ordered (0, 1, -1, 2, -2, 3, -3).

class Mat7 {
 public:
  static constexpr int kN = 7;
  static Mat7 zero(const Field& f);
  static Mat7 identity(const Field& f);

  // Slot of the signed coordinate index i in {-3..3}.
  static int slot(int i) { return i == 0 ? 0 : i > 0 ? 2 * i - 1 : -2 * i; }

  QuadExtElem& at(int i, int j) { return a_[slot(i)][slot(j)]; }  // signed indices
  const QuadExtElem& at(int i, int j) const { return a_[slot(i)][slot(j)]; }
  const Field& field() const { return *f_; }
  QuadExtElem& raw(int r, int c) { return a_[r][c]; }
  const QuadExtElem& raw(int r, int c) const { return a_[r][c]; }

  friend Mat7 operator*(const Mat7& x, const Mat7& y);
  friend Mat7 operator+(const Mat7& x, const Mat7& y);
  friend bool operator==(const Mat7& x, const Mat7& y) { return x.a_ == y.a_; }
  Mat7 conj() const;
  Mat7 transpose() const;
  // Gauss-Jordan over L; std::nullopt if singular.
  std::optional<Mat7> inverse() const;
  // Representative modulo scalars: first nonzero entry (row-major) is 1.
  Mat7 normalized() const;

  std::string to_string() const;

 private:
  const Field* f_ = nullptr;
  std::array<std::array<QuadExtElem, kN>, kN> a_;
};

// The matrix of u_r(lambda) for r in the B3 subsystem (e4-coordinate 0).
Mat7 b3_generator(const Field& f, int r, const QuadExtElem& lambda);

// First row in L, the rest in K, first column zero below the corner.
bool has_mixed_shape(const Mat7& a);

// Upper-triangular matrix of R = x0^2 + x1 x-1 + x2 x-2 + x3 x-3.
Mat7 form_R(const Field& f);
// Upper-triangular matrix of Q = x0^2 + alpha N + beta N + alpha beta N.
Mat7 form_Q(const Field& f);
Mat7 matrix_S(const Field& f);
Mat7 matrix_M(const Field& f);

// Two matrices define the same quadratic form: equal diagonals and equal
// polar parts A + A^t.
bool same_quadratic_form(const Mat7& a, const Mat7& b);
// R(Av) = R(v): basis values and polar form both preserved.
bool preserves_R(const Mat7& a);

// x -> M^-1 conj(x) M
Mat7 sigma_b3(const Mat7& a);

// Column span checks for the flags <x1> < <x1,x2> < <x1,x2,x3> (sign +1)
// and <y1> < <y1,y2> < <y1,y2,y3> (sign -1).
bool fixes_flag(const Mat7& a, int sign);

}  // namespace mixf4

#endif  // MIXF4_INVOLUTION_HPP_
