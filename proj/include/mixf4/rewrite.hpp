#ifndef MIXF4_REWRITE_HPP_
#define MIXF4_REWRITE_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixf4/involution.hpp"
#include "mixf4/word.hpp"

namespace mixf4 {

class NormViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IdentityInput : public std::invalid_argument {
 public:
  IdentityInput() : std::invalid_argument("tau is undefined on the identity") {}
};

class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of U^1 = U_J ∩ Fix(sigma), given by its free coefficients.
// The product u_{r1}(t1) u_{r2}(t2') u_{r3}(alpha conj t2') ... u_{r15}(t15)
// has dependent coefficients t3, t5, t7, t9, t11, t13, t14.
struct U1Elem {
  QuadExtElem t1;                 // L
  QuadExtElem t2, t4, t6;         // K
  QuadExtElem t8, t10, t12, t15;  // L

  bool is_identity() const;
  friend bool operator==(const U1Elem&, const U1Elem&) = default;

  // t1 + conj t1 + t8 conj t8 + alpha t10 conj t10 + beta t12 conj t12
  //   + alpha beta t15 conj t15
  QuadExtElem norm_defect() const;

  // All 15 coefficients, index 1..15 (index 0 unused).
  std::array<QuadExtElem, 16> coefficients() const;

  // Throws NormViolation / FieldViolation.
  void validate() const;
  std::string to_string() const;
};

U1Elem zero_u1(const Field& f);

// u_{r1}(t1) ... u_{r15}(t15), identity factors omitted.
Word canonical_word(const U1Elem& u);

// n_{e4} = n_{e4}(1)
Atom n_e4(const Field& f);

// The individual rewriting rules.  Each returns a word equal in the group to
// the two-atom input.
Word swap_n(const Atom& n, const Atom& x);         // n_s x_r(t) = x_{w_s r}(t) n_s
Word swap_h(const Atom& x, const Atom& h);         // x_r(t) h_s(l) = h_s(l) x_r(t l^-A)
Word swap_comm(const Atom& x, const Atom& y);      // x_r x_s = x_s x_r [x_r, x_s]
Word split_opposite(const Atom& x, const Atom& y);  // x_r(t) x_{-r}(t')

// Sorts a word of root elements with roots of nonnegative e4-part into the
// order r1..r15 (e4-part zero first), merging equal roots.  Returns the
// coefficients by position 1..15; throws RewriteError if an element with
// e4-part zero survives.
std::array<QuadExtElem, 16> collect(const Field& f, Word w);

struct TraceStep {
  std::string rule;
  std::vector<std::string> before;
  std::vector<std::string> after;
};

struct RewriteOptions {
  std::uint64_t step_bound = 1'000'000;
  bool trace = false;
};

struct RewriteResult {
  Word b;                       // left of n_{e4}
  U1Elem uprime;                // right of n_{e4}
  std::uint64_t steps = 0;      // rule applications
  std::uint64_t measure_increases = 0;  // rounds where the measure grew
  std::vector<TraceStep> trace;
};

// Rewrites n_{e4} u n_{e4} as b n_{e4} u'.  Throws IdentityInput for u = 1 and
// RewriteError when the step bound is exceeded or the procedure gets stuck.
RewriteResult tau_normal_form(const U1Elem& u, const RewriteOptions& opts = {});

// n u n as a word.
Word conjugated_word(const U1Elem& u);

// Matrix check g = b n u' for the given b and u'.
bool decomposition_holds(const Field& f, const Word& g, const Word& b, const U1Elem& uprime);
// Matrix oracle: g u''^-1 n lies in P_J; by uniqueness of the decomposition
// this singles out u'' = u'.
bool decomposes_through(const Field& f, const Word& g, const U1Elem& candidate);
// Both of the above plus agreement of b with the oracle's left factor.
bool unique_decomposition_check(const Field& f, const Word& g, const RewriteResult& r);

// Word-level sigma fixedness, checked on matrices.
bool sigma_fixed(const Field& f, const Word& w, const CoeffTable& c);

}  // namespace mixf4

#endif  // MIXF4_REWRITE_HPP_
