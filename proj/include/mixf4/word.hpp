#ifndef MIXF4_WORD_HPP_
#define MIXF4_WORD_HPP_

#include <string>
#include <vector>

#include "mixf4/chevalley.hpp"

namespace mixf4 {

enum class AtomKind { kRoot, kHua, kN };

// One generator: u_r(t), h_r(t) or n_r(t).
struct Atom {
  AtomKind kind = AtomKind::kRoot;
  int root = 0;
  QuadExtElem coeff;

  static Atom u(int r, QuadExtElem t) { return {AtomKind::kRoot, r, std::move(t)}; }
  static Atom h(int r, QuadExtElem t) { return {AtomKind::kHua, r, std::move(t)}; }
  static Atom n(int r, QuadExtElem t) { return {AtomKind::kN, r, std::move(t)}; }

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.kind == b.kind && a.root == b.root && a.coeff == b.coeff;
  }
  std::string to_string() const;  // e.g. "u[e1+e4](t)"
};

using Word = std::vector<Atom>;

// Throws FieldViolation / DivisionByZero for malformed atoms.
void validate(const Atom& a);
void validate(const Word& w);

// Left action of the word on a vector (rightmost atom acts first).
LieVec apply(const Word& w, LieVec v);
GroupMatrix evaluate(const Field& f, const Word& w);
// evaluate(f, w) == m for a group element m, decided on the columns of
// lie_generators_mod2() only.
bool evaluates_to(const Field& f, const Word& w, const GroupMatrix& m);

Atom inverse(const Atom& a);
Word inverse(const Word& w);

Word concat(const Word& a, const Word& b);
std::string to_string(const Word& w);

}  // namespace mixf4

#endif  // MIXF4_WORD_HPP_
