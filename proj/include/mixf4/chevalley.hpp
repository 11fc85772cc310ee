#ifndef MIXF4_CHEVALLEY_HPP_
#define MIXF4_CHEVALLEY_HPP_

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mixf4/field.hpp"
#include "mixf4/roots.hpp"

namespace mixf4 {

class FieldViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Basis of the 52-dimensional Lie algebra: e_r for r = 0..47 (root index),
// then h_{a1}, ..., h_{a4} at 48..51.
inline constexpr int kDim = 52;
inline constexpr int kFirstH = 48;

// Integral structure constants of the F4 Chevalley basis.
//
// Signs follow the extraspecial-pair convention (all extraspecial N > 0) and
// are propagated through the standard identities between the N_{rs}.
class StructureConstants {
 public:
  static const StructureConstants& f4();
  // Arbitrary table, used to exercise the self-checks.
  static StructureConstants from_table(std::vector<std::vector<int>> n) {
    return StructureConstants(std::move(n));
  }
  const std::vector<std::vector<int>>& table() const { return n_; }

  // N_{rs} with [e_r, e_s] = N_{rs} e_{r+s}; 0 when r+s is not a root.
  int N(int r, int s) const { return n_[r][s]; }
  // M_{r,s,i} = N_{r,s} N_{r,r+s} ... N_{r,(i-1)r+s} / i!, i >= 1.
  long M(int r, int s, int i) const;

  using Vec = std::vector<std::pair<int, long>>;  // sorted sparse Z-vector
  // Lie bracket of two basis elements.
  Vec bracket(int x, int y) const;

  // |N_rs| = p+1 for every pair with r+s a root.
  bool check_magnitudes() const;
  // Counts of antisymmetry / Jacobi failures over all basis pairs/triples.
  long antisymmetry_failures() const;
  long jacobi_failures() const;

 private:
  StructureConstants();
  explicit StructureConstants(std::vector<std::vector<int>> n) : n_(std::move(n)) {}
  std::vector<std::vector<int>> n_;
};

// Sparse vector over L in the Lie algebra basis, sorted by index.
using LieVec = std::vector<std::pair<int, QuadExtElem>>;

// Group element of the adjoint representation, stored by columns: column j
// is the image of basis vector j.
class GroupMatrix {
 public:
  static GroupMatrix identity(const Field& f);

  const LieVec& column(int j) const { return cols_[j]; }
  LieVec& column(int j) { return cols_[j]; }
  QuadExtElem entry(int i, int j) const;

  friend GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b);
  friend bool operator==(const GroupMatrix& a, const GroupMatrix& b) { return a.cols_ == b.cols_; }

  // Matrix applied to a vector.
  LieVec apply(const LieVec& v) const;

  // Row-major dump, zero entries as ".".
  std::string dump() const;

 private:
  const Field* field_ = nullptr;
  std::array<LieVec, kDim> cols_;
};

// Left actions on vectors (the building blocks of word evaluation).
LieVec act_u(int r, const QuadExtElem& t, const LieVec& v);
LieVec act_h(int r, const QuadExtElem& lambda, const LieVec& v);

// Throws FieldViolation if a long root carries a coefficient outside K.
void check_level(int r, const QuadExtElem& t);

GroupMatrix gen_u(const Field& f, int r, const QuadExtElem& t);
// n_r(t) = u_r(t) u_{-r}(t^-1) u_r(t)   (signs vanish in characteristic 2)
GroupMatrix gen_n(const Field& f, int r, const QuadExtElem& t);
// h_r(t) = n_r(t) n_r(1)
GroupMatrix gen_h(const Field& f, int r, const QuadExtElem& t);
// Diagonal form of h_r(t): e_s -> t^{A_rs} e_s.
GroupMatrix gen_h_diag(const Field& f, int r, const QuadExtElem& t);

// [u_r(x), u_s(y)] compared with the case list of the commutator formula.
bool check_commutator(const Field& f, int r, int s, const QuadExtElem& x, const QuadExtElem& y);

// Grade of a basis vector: doubled e4-coordinate (0 for h).
int basis_grade(int j);

// Root vectors generating the Lie algebra over any field of characteristic
// 2 (only odd structure constants and [e_r, e_-r] = h_r are used).  Group
// elements act as Lie algebra automorphisms, so two of them that agree on
// these columns are equal.  The closure is certified on first use.
const std::vector<int>& lie_generators_mod2();
// Dimension of the span reached by bracket closure of `start`, mod 2.
int closure_dim_mod2(const std::vector<int>& start);

bool in_parabolic_PJ(const GroupMatrix& g);
bool in_UJ(const GroupMatrix& g);
bool in_UJ_minus(const GroupMatrix& g);

}  // namespace mixf4

#endif  // MIXF4_CHEVALLEY_HPP_
