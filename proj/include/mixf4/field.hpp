#ifndef MIXF4_FIELD_HPP_
#define MIXF4_FIELD_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixf4/poly.hpp"
#include "mixf4/ratfunc.hpp"

namespace mixf4 {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldMode { kMixed, kAlgebraic };

// The base fields k <= l and the constants delta, alpha, beta.
//
// l = GF(2)(indeterminates).  In mixed mode k is the subfield of elements
// even in the designated variable t, so l^2 <= k <= l and k != l.  In
// algebraic mode k = l.
struct FieldSpec {
  std::vector<std::string> indeterminates;
  std::optional<int> mixed_var;
  FieldMode mode = FieldMode::kMixed;
  RatFunc delta;
  RatFunc alpha;
  RatFunc beta;

  static FieldSpec default_mixed();      // l = GF(2)(d,a,b,t), t mixed
  static FieldSpec default_algebraic();  // k = l = GF(2)(d,a,b)
};

class QuadExtElem;

// Evaluation context for L = l(gamma), gamma^2 + gamma = delta.
// Elements keep a pointer to their Field, which must outlive them.
class Field {
 public:
  // Throws ConfigError when the field description is malformed.
  explicit Field(FieldSpec spec);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  const FieldSpec& spec() const { return spec_; }
  bool mixed() const { return spec_.mode == FieldMode::kMixed; }
  const std::vector<std::string>& names() const { return spec_.indeterminates; }
  int num_vars() const { return static_cast<int>(spec_.indeterminates.size()); }
  const Poly& delta_num() const { return delta_num_; }
  const Poly& delta_den() const { return delta_den_; }

  // x in k?  Always true in algebraic mode.
  bool in_subfield_k(const RatFunc& x) const;

  QuadExtElem zero() const;
  QuadExtElem one() const;
  QuadExtElem gamma() const;
  QuadExtElem embed(const RatFunc& x) const;
  QuadExtElem make(const RatFunc& u, const RatFunc& v) const;  // u + v*gamma
  QuadExtElem variable(int i) const;
  QuadExtElem delta() const;
  QuadExtElem alpha() const;
  QuadExtElem beta() const;

  // Textual element format, e.g. "(d*a + 1) / (t^2) + (a)*g".
  QuadExtElem parse(std::string_view text) const;
  RatFunc parse_base(std::string_view text) const;

 private:
  FieldSpec spec_;
  Poly delta_num_;
  Poly delta_den_;
};

// u + v*gamma, stored over a common denominator as (p + q*gamma)/den with
// gcd(p, q, den) = 1, which makes the representation canonical.
class QuadExtElem {
 public:
  QuadExtElem() : den_(Poly::one()) {}

  const Field* field() const { return field_; }
  RatFunc u() const { return RatFunc(p_, den_); }
  RatFunc v() const { return RatFunc(q_, den_); }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool is_one() const { return p_.is_one() && q_.is_zero() && den_.is_one(); }
  // True iff v = 0.
  bool in_base() const { return q_.is_zero(); }
  // u, v in k: the element lies in K = k(gamma).
  bool in_K() const;

  QuadExtElem conj() const;
  RatFunc trace() const { return v(); }
  RatFunc norm() const;
  QuadExtElem square() const;
  QuadExtElem inverse() const;
  QuadExtElem pow(int e) const;

  friend QuadExtElem operator+(const QuadExtElem& a, const QuadExtElem& b);
  friend QuadExtElem operator*(const QuadExtElem& a, const QuadExtElem& b);
  friend QuadExtElem operator/(const QuadExtElem& a, const QuadExtElem& b) {
    return a * b.inverse();
  }
  friend QuadExtElem operator-(const QuadExtElem& a, const QuadExtElem& b) { return a + b; }
  QuadExtElem& operator+=(const QuadExtElem& b) { return *this = *this + b; }
  QuadExtElem& operator*=(const QuadExtElem& b) { return *this = *this * b; }
  friend bool operator==(const QuadExtElem& a, const QuadExtElem& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.den_ == b.den_;
  }

  std::string to_string() const;

  // Size measure used for diagnostics (total number of monomials).
  std::size_t complexity() const { return p_.size() + q_.size() + den_.size(); }

 private:
  friend class Field;
  QuadExtElem(const Field* f, Poly p, Poly q, Poly den);  // normalizes
  static QuadExtElem reduced(const Field* f, Poly p, Poly q, Poly den);

  const Field* field_ = nullptr;
  Poly p_;
  Poly q_;
  Poly den_;
};

inline QuadExtElem conj(const QuadExtElem& x) { return x.conj(); }
inline RatFunc trace(const QuadExtElem& x) { return x.trace(); }
inline RatFunc norm(const QuadExtElem& x) { return x.norm(); }

}  // namespace mixf4

#endif  // MIXF4_FIELD_HPP_
