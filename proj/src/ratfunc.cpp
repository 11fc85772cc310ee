#include "mixf4/ratfunc.hpp"

namespace mixf4 {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    den_ = Poly::one();
    return;
  }
  Poly g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return from_reduced(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  Poly da = a.den_ / g;
  Poly db = b.den_ / g;
  Poly num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return RatFunc();
  // Any common factor of num and the new denominator divides g.
  Poly h = gcd(num, g);
  return RatFunc::from_reduced(num / h, (da * db) * (g / h));
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  return RatFunc::from_reduced((a.num_ / g1) * (b.num_ / g2),
                               (a.den_ / g2) * (b.den_ / g1));
}

std::pair<RatFunc, RatFunc> RatFunc::split_even_odd(int var) const {
  // x = num*den / den^2; den^2 is even in var.
  Poly den2 = den_.square();
  auto [even, odd] = (num_ * den_).split_parity(var);
  // odd = var * odd', with odd' even in var.
  Poly odd_reduced = odd.div_monomial(odd.is_zero() ? 0 : mono::unit(var));
  return {RatFunc(even, den2), RatFunc(odd_reduced, den2)};
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
  if (den_.is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
}

}  // namespace mixf4
