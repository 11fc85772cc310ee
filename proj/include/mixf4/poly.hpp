#ifndef MIXF4_POLY_HPP_
#define MIXF4_POLY_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixf4 {

// Multivariate polynomials over GF(2) in at most four indeterminates.
//
// A monomial is packed into 64 bits: the total degree occupies bits 48..63
// and the exponent of variable i occupies the 12-bit field starting at bit
// 36 - 12 i.  Comparing packed words as unsigned integers therefore yields
// the graded-lexicographic order with variable 0 most significant.
using Monomial = std::uint64_t;

inline constexpr int kMaxVars = 4;
inline constexpr unsigned kMaxExponent = 0xFFF;

class ExponentOverflow : public std::overflow_error {
 public:
  ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

namespace mono {

constexpr int shift(int var) { return 36 - 12 * var; }
constexpr Monomial unit(int var) {
  return (Monomial{1} << shift(var)) | (Monomial{1} << 48);
}
constexpr unsigned exponent(Monomial m, int var) {
  return static_cast<unsigned>((m >> shift(var)) & kMaxExponent);
}
constexpr unsigned total_degree(Monomial m) {
  return static_cast<unsigned>(m >> 48);
}

// Carry/borrow positions between the packed fields.
inline constexpr Monomial kBoundary = (Monomial{1} << 12) | (Monomial{1} << 24) |
                                      (Monomial{1} << 36) | (Monomial{1} << 48);

inline Monomial mul(Monomial a, Monomial b) {
  Monomial s = a + b;
  if (((a ^ b ^ s) & kBoundary) != 0 || s < a) throw ExponentOverflow();
  return s;
}

// True iff a divides b.
constexpr bool divides(Monomial a, Monomial b) {
  if (a > b) return false;
  Monomial d = b - a;
  return ((a ^ b ^ d) & kBoundary) == 0;
}

inline Monomial make(const std::array<unsigned, kMaxVars>& exps) {
  Monomial m = 0;
  unsigned total = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (exps[i] > kMaxExponent) throw ExponentOverflow();
    m |= Monomial{exps[i]} << shift(i);
    total += exps[i];
  }
  return m | (Monomial{total} << 48);
}

// Componentwise minimum (gcd of monomials).
inline Monomial min(Monomial a, Monomial b) {
  std::array<unsigned, kMaxVars> e{};
  for (int i = 0; i < kMaxVars; ++i)
    e[i] = std::min(exponent(a, i), exponent(b, i));
  return make(e);
}

}  // namespace mono

class Poly {
 public:
  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(std::vector<Monomial>{0}); }
  static Poly var(int i) { return Poly(std::vector<Monomial>{mono::unit(i)}); }
  static Poly monomial(Monomial m) { return Poly(std::vector<Monomial>{m}); }
  // Takes an arbitrary list of monomials; repeated monomials cancel in pairs.
  static Poly from_terms(std::vector<Monomial> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0] == 0; }
  bool is_constant() const { return is_zero() || is_one(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }
  Monomial lead() const { return terms_.front(); }

  unsigned degree_in(int var) const;
  unsigned total_degree() const;
  // Bitmask of variables that occur with positive exponent.
  unsigned support() const;
  // Greatest monomial dividing every term (0 for the zero polynomial).
  Monomial monomial_content() const;
  // True iff every exponent of `var` is even.
  bool is_even_in(int var) const;

  Poly square() const;  // Frobenius: doubles every exponent
  Poly mul_monomial(Monomial m) const;
  // Exact quotient by a monomial; throws if not divisible.
  Poly div_monomial(Monomial m) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Returns a/b if b divides a exactly.
  friend std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

  // Coefficients with respect to `var`: result[i] is the coefficient of
  // var^i, itself free of `var`.
  std::vector<Poly> coefficients_in(int var) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, int var);

  // Split into the parts with even and odd exponent of `var`.
  std::pair<Poly, Poly> split_parity(int var) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  explicit Poly(std::vector<Monomial> sorted_terms) : terms_(std::move(sorted_terms)) {}
  std::vector<Monomial> terms_;  // strictly decreasing
};

// Exact division; throws std::domain_error if b does not divide a.
Poly operator/(const Poly& a, const Poly& b);

// Greatest common divisor (GF(2) has no nontrivial units, so it is unique).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace mixf4

#endif  // MIXF4_POLY_HPP_
