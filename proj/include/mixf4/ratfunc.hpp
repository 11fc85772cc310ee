#ifndef MIXF4_RATFUNC_HPP_
#define MIXF4_RATFUNC_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "mixf4/poly.hpp"

namespace mixf4 {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Element of GF(2)(x0,...,x3): num/den with gcd(num, den) = 1, den != 0.
// Over GF(2) the reduced representative is unique, so equality is structural.
class RatFunc {
 public:
  RatFunc() : den_(Poly::one()) {}
  RatFunc(Poly num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(Poly::one()) {}
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc one() { return RatFunc(Poly::one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc square() const { return from_reduced(num_.square(), den_.square()); }
  RatFunc inverse() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + b; }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  // Membership in the subfield of elements even in `var`, i.e. in
  // GF(2)(..., var^2, ...).  Uses x = num*den / den^2 with den^2 even.
  bool is_even_in(int var) const { return (num_ * den_).is_even_in(var); }
  // Unique x = x0 + v*x1 with x0, x1 even in v.
  std::pair<RatFunc, RatFunc> split_even_odd(int var) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  static RatFunc from_reduced(Poly num, Poly den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }
  Poly num_;
  Poly den_;
};

}  // namespace mixf4

#endif  // MIXF4_RATFUNC_HPP_
