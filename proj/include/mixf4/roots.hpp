#ifndef MIXF4_ROOTS_HPP_
#define MIXF4_ROOTS_HPP_

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixf4 {

class LinearlyDependent : public std::invalid_argument {
 public:
  LinearlyDependent() : std::invalid_argument("roots are linearly dependent") {}
};

// A vector in the e-basis, stored with every coordinate doubled so that the
// half-integral roots of F4 have integer coordinates.
struct Root {
  std::array<int, 4> c{};

  friend Root operator+(const Root& a, const Root& b) {
    return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
  }
  friend Root operator-(const Root& a, const Root& b) {
    return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
  }
  Root operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }
  friend Root operator*(int k, const Root& a) {
    return {{k * a.c[0], k * a.c[1], k * a.c[2], k * a.c[3]}};
  }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

  bool is_zero() const { return c == std::array<int, 4>{}; }
  // Four times the usual inner product.
  friend int dot4(const Root& a, const Root& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] + a.c[3] * b.c[3];
  }
  // Doubled e4-coordinate, in {-2,...,2} for roots.
  int grade() const { return c[3]; }

  std::string to_string() const;  // "(c1,c2,c3,c4)", doubled coordinates
};

// The F4 root system with the fundamental system
//   a1 = (-e1-e2-e3+e4)/2, a2 = e3, a3 = e2-e3, a4 = e1-e2,
// its B3 subsystem spanned by a2, a3, a4 and the ordered list r1..r15 of
// positive roots with positive e4-part.  Roots are referred to by index
// 0..47 throughout the library.
class RootSystem {
 public:
  static constexpr int kNumRoots = 48;
  static const RootSystem& f4();

  const Root& root(int i) const { return roots_[i]; }
  const std::vector<Root>& roots() const { return roots_; }
  // Index of a root or -1.
  int index(const Root& r) const;
  bool is_root(const Root& r) const { return index(r) >= 0; }

  int neg(int i) const { return neg_[i]; }
  // Index of root(i) + root(j), or -1.
  int sum(int i, int j) const { return sum_[i][j]; }
  bool is_long(int i) const { return dot4(roots_[i], roots_[i]) == 8; }
  bool is_short(int i) const { return !is_long(i); }
  bool is_positive(int i) const { return positive_[i]; }

  // Cartan integer 2<r,s>/<r,r>; the eigenvalue of h_r on e_s.
  int cartan(int r, int s) const { return cartan_[r][s]; }

  int fundamental(int i) const { return fundamental_[i]; }  // i = 0..3
  const std::array<int, 4>& expansion(int i) const { return expansion_[i]; }
  // Fundamental indices (0..3) a_{i1}, a_{i2}, ... whose partial sums (with
  // sign matching the root) are all roots and whose total is root(i).
  const std::vector<int>& build_chain(int i) const { return chain_[i]; }
  // Expansion of the coroot 2r/<r,r> in the fundamental coroots.
  const std::array<int, 4>& coroot_expansion(int i) const { return coroot_[i]; }

  int reflect(int s, int r) const;  // w_s(r)
  int sigma(int i) const { return sigma_[i]; }
  // The map negating the e4-coordinate: the Weyl element of n_{e4}.
  int flip_e4(int i) const { return flip_[i]; }

  // (p, q): p = max{k : s - k r in Phi}, q = max{k : s + k r in Phi}.
  std::pair<int, int> root_string(int r, int s) const;

  bool in_levi(int i) const { return roots_[i].grade() == 0; }  // Phi_J
  // r_1..r_15, 1-based position in [1,15] or 0 for other roots.
  int u_index(int i) const { return u_pos_[i]; }
  int u_root(int k) const { return u_list_[k - 1]; }  // k = 1..15

  std::string name(int i) const;  // e.g. "e1+e4", "(e1-e2+e3+e4)/2"

 private:
  RootSystem();
  std::vector<Root> roots_;
  std::vector<int> neg_;
  std::vector<std::vector<int>> sum_;
  std::vector<std::vector<int>> cartan_;
  std::vector<bool> positive_;
  std::array<int, 4> fundamental_{};
  std::vector<std::array<int, 4>> expansion_;
  std::vector<std::array<int, 4>> coroot_;
  std::vector<std::vector<int>> chain_;
  std::vector<int> sigma_;
  std::vector<int> flip_;
  std::vector<int> u_pos_;
  std::array<int, 15> u_list_{};
};

// Every long root has even coefficients at the short fundamental roots.
bool verify_lemma_long();

}  // namespace mixf4

#endif  // MIXF4_ROOTS_HPP_
