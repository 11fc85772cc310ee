#include "mixf4/word.hpp"

namespace mixf4 {

std::string Atom::to_string() const {
  const char* k = kind == AtomKind::kRoot ? "u" : kind == AtomKind::kHua ? "h" : "n";
  return std::string(k) + "[" + RootSystem::f4().name(root) + "](" + coeff.to_string() + ")";
}

void validate(const Atom& a) {
  if (a.root < 0 || a.root >= RootSystem::kNumRoots) throw std::out_of_range("atom root");
  if (a.kind != AtomKind::kRoot && a.coeff.is_zero()) throw DivisionByZero();
  if (a.kind != AtomKind::kHua) check_level(a.root, a.coeff);
}

void validate(const Word& w) {
  for (const Atom& a : w) validate(a);
}

namespace {

LieVec act(const Atom& a, const LieVec& v) {
  switch (a.kind) {
    case AtomKind::kRoot:
      return act_u(a.root, a.coeff, v);
    case AtomKind::kHua:
      return act_h(a.root, a.coeff, v);
    case AtomKind::kN: {
      LieVec x = act_u(a.root, a.coeff, v);
      x = act_u(RootSystem::f4().neg(a.root), a.coeff.inverse(), x);
      return act_u(a.root, a.coeff, x);
    }
  }
  return v;
}

}  // namespace

LieVec apply(const Word& w, LieVec v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = act(*it, v);
  return v;
}

GroupMatrix evaluate(const Field& f, const Word& w) {
  GroupMatrix g = GroupMatrix::identity(f);
  for (int j = 0; j < kDim; ++j) g.column(j) = apply(w, g.column(j));
  return g;
}

bool evaluates_to(const Field& f, const Word& w, const GroupMatrix& m) {
  for (int j : lie_generators_mod2())
    if (apply(w, {{j, f.one()}}) != m.column(j)) return false;
  return true;
}

Atom inverse(const Atom& a) {
  // u_r(t) and n_r(t) are involutions in characteristic 2.
  if (a.kind == AtomKind::kHua) return Atom::h(a.root, a.coeff.inverse());
  return a;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " * ";
    s += w[i].to_string();
  }
  return s;
}

}  // namespace mixf4
