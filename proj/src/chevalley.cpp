#include "mixf4/chevalley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace mixf4 {

namespace {

const RootSystem& RS() { return RootSystem::f4(); }
constexpr int kN = RootSystem::kNumRoots;

int height(int r) {
  const auto& e = RS().expansion(r);
  return e[0] + e[1] + e[2] + e[3];
}

// Sign solver for the N_{rs}.  Magnitudes are p+1; only signs are unknown.
class SignSolver {
 public:
  SignSolver() : sgn_(kN, std::vector<int>(kN, 0)), mag_(kN, std::vector<int>(kN, 0)) {
    for (int r = 0; r < kN; ++r)
      for (int s = 0; s < kN; ++s)
        if (RS().sum(r, s) >= 0) mag_[r][s] = RS().root_string(r, s).first + 1;
  }

  std::vector<std::vector<int>> solve() {
    seed_extraspecial();
    bool progress = true;
    while (progress) {
      progress = false;
      progress |= propagate_pairs();
      progress |= propagate_quadruples();
    }
    std::vector<std::vector<int>> n(kN, std::vector<int>(kN, 0));
    for (int r = 0; r < kN; ++r)
      for (int s = 0; s < kN; ++s) {
        if (mag_[r][s] == 0) continue;
        if (sgn_[r][s] == 0) throw std::logic_error("structure constant sign undetermined");
        n[r][s] = sgn_[r][s] * mag_[r][s];
      }
    return n;
  }

 private:
  bool set(int r, int s, int v) {
    int& cur = sgn_[r][s];
    if (cur == v) return false;
    if (cur != 0) throw std::logic_error("inconsistent structure constant signs");
    cur = v;
    return true;
  }

  void seed_extraspecial() {
    std::vector<int> pos;
    for (int r = 0; r < kN; ++r)
      if (RS().is_positive(r)) pos.push_back(r);
    std::stable_sort(pos.begin(), pos.end(),
                     [](int a, int b) { return height(a) < height(b); });
    for (int xi : pos) {
      if (height(xi) == 1) continue;
      for (int a : pos) {
        int b = RS().index(RS().root(xi) - RS().root(a));
        if (b >= 0 && RS().is_positive(b)) {
          set(a, b, 1);
          break;
        }
      }
    }
  }

  bool propagate_pairs() {
    bool progress = false;
    for (int r = 0; r < kN; ++r)
      for (int s = 0; s < kN; ++s) {
        int v = sgn_[r][s];
        if (v == 0) continue;
        progress |= set(s, r, -v);
        progress |= set(RS().neg(r), RS().neg(s), -v);
        // r + s + t = 0: N_rs/<t,t> = N_st/<r,r> = N_tr/<s,s>
        int t = RS().neg(RS().sum(r, s));
        progress |= set(s, t, v);
        progress |= set(t, r, v);
      }
    return progress;
  }

  // Value of N_ab*N_cd/<a+b,a+b>, scaled by 2, as (known?, value).
  struct Term {
    bool present = false;
    int unknown_count = 0;
    int weight = 0;  // magnitude part, scaled
    int sign = 1;    // product of the known signs
  };
  Term term(int a, int b, int c, int d) const {
    Term t;
    if (mag_[a][b] == 0) return t;
    t.present = true;
    int len = RS().is_long(RS().sum(a, b)) ? 1 : 2;  // 2/<x,x>
    t.weight = mag_[a][b] * mag_[c][d] * len;
    for (int v : {sgn_[a][b], sgn_[c][d]}) {
      if (v == 0) ++t.unknown_count;
      else t.sign *= v;
    }
    return t;
  }

  // For r+s+t+u = 0 with no opposite pair:
  //   N_rs N_tu/<r+s,r+s> + N_st N_ru/<s+t,s+t> + N_tr N_su/<t+r,t+r> = 0.
  bool propagate_quadruples() {
    bool progress = false;
    for (int r = 0; r < kN; ++r)
      for (int s = 0; s < kN; ++s) {
        if (s == r || s == RS().neg(r)) continue;
        for (int t = 0; t < kN; ++t) {
          if (t == r || t == s || t == RS().neg(r) || t == RS().neg(s)) continue;
          Root ur = -(RS().root(r) + RS().root(s) + RS().root(t));
          int u = RS().index(ur);
          if (u < 0 || u == RS().neg(r) || u == RS().neg(s) || u == RS().neg(t)) continue;
          if (u == r || u == s || u == t) continue;
          Term terms[3] = {term(r, s, t, u), term(s, t, r, u), term(t, r, s, u)};
          const int pairs[3][4] = {{r, s, t, u}, {s, t, r, u}, {t, r, s, u}};
          int total_unknown = 0, known_sum = 0, which = -1;
          for (int k = 0; k < 3; ++k) {
            if (!terms[k].present) continue;
            if (terms[k].unknown_count > 0) {
              total_unknown += terms[k].unknown_count;
              which = k;
            } else {
              known_sum += terms[k].sign * terms[k].weight;
            }
          }
          if (total_unknown == 0) {
            if (known_sum != 0) throw std::logic_error("four-root identity violated");
            continue;
          }
          if (total_unknown != 1) continue;
          const Term& tm = terms[which];
          // tm.sign * x * weight = -known_sum
          if (known_sum == 0 || std::abs(known_sum) != tm.weight)
            throw std::logic_error("four-root identity not solvable");
          int x = (-known_sum / tm.weight) * tm.sign;
          const int* p = pairs[which];
          if (sgn_[p[0]][p[1]] == 0) progress |= set(p[0], p[1], x);
          else progress |= set(p[2], p[3], x);
        }
      }
    return progress;
  }

  std::vector<std::vector<int>> sgn_;
  std::vector<std::vector<int>> mag_;
};

}  // namespace

const StructureConstants& StructureConstants::f4() {
  static const StructureConstants sc;
  return sc;
}

StructureConstants::StructureConstants() : n_(SignSolver().solve()) {}

long StructureConstants::M(int r, int s, int i) const {
  long num = 1;
  long fact = 1;
  int cur = s;
  for (int k = 0; k < i; ++k) {
    if (cur < 0) return 0;
    int nx = RS().sum(r, cur);
    if (nx < 0) return 0;
    num *= n_[r][cur];
    fact *= k + 1;
    cur = nx;
  }
  if (num % fact != 0) throw std::logic_error("non-integral M constant");
  return num / fact;
}

StructureConstants::Vec StructureConstants::bracket(int x, int y) const {
  const bool hx = x >= kFirstH, hy = y >= kFirstH;
  if (hx && hy) return {};
  if (hx) {
    int c = RS().cartan(RS().fundamental(x - kFirstH), y);
    return c ? Vec{{y, c}} : Vec{};
  }
  if (hy) {
    int c = -RS().cartan(RS().fundamental(y - kFirstH), x);
    return c ? Vec{{x, c}} : Vec{};
  }
  if (y == RS().neg(x)) {
    Vec out;
    const auto& co = RS().coroot_expansion(x);
    for (int i = 0; i < 4; ++i)
      if (co[i]) out.push_back({kFirstH + i, co[i]});
    return out;
  }
  int z = RS().sum(x, y);
  if (z < 0) return {};
  return {{z, n_[x][y]}};
}

bool StructureConstants::check_magnitudes() const {
  for (int r = 0; r < kN; ++r)
    for (int s = 0; s < kN; ++s) {
      if (RS().sum(r, s) < 0) {
        if (n_[r][s] != 0) return false;
        continue;
      }
      if (std::abs(n_[r][s]) != RS().root_string(r, s).first + 1) return false;
    }
  return true;
}

namespace {

using ZVec = std::map<int, long>;

void add_bracket(const StructureConstants& sc, ZVec& acc, int x, const ZVec& v, long scale) {
  for (const auto& [b, c] : v)
    for (const auto& [k, d] : sc.bracket(x, b)) acc[k] += scale * c * d;
}

bool all_zero(const ZVec& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& kv) { return kv.second == 0; });
}

ZVec to_map(const StructureConstants::Vec& v) { return ZVec(v.begin(), v.end()); }

}  // namespace

long StructureConstants::antisymmetry_failures() const {
  long bad = 0;
  for (int x = 0; x < kDim; ++x)
    for (int y = 0; y < kDim; ++y) {
      ZVec s = to_map(bracket(x, y));
      for (const auto& [k, c] : bracket(y, x)) s[k] += c;
      if (!all_zero(s)) ++bad;
    }
  return bad;
}

long StructureConstants::jacobi_failures() const {
  std::vector<std::vector<ZVec>> br(kDim, std::vector<ZVec>(kDim));
  for (int x = 0; x < kDim; ++x)
    for (int y = 0; y < kDim; ++y) br[x][y] = to_map(bracket(x, y));
  long bad = 0;
  for (int x = 0; x < kDim; ++x)
    for (int y = 0; y < kDim; ++y)
      for (int z = 0; z < kDim; ++z) {
        ZVec acc;
        add_bracket(*this, acc, x, br[y][z], 1);
        add_bracket(*this, acc, y, br[z][x], 1);
        add_bracket(*this, acc, z, br[x][y], 1);
        if (!all_zero(acc)) ++bad;
      }
  return bad;
}

// ---------------------------------------------------------------------------
// Action of u_r(t) on the basis, reduced mod 2.

namespace {

struct ImageTerm {
  int target;
  int power;  // of t
};

class ActionTable {
 public:
  static const ActionTable& get() {
    static const ActionTable t;
    return t;
  }
  const std::vector<ImageTerm>& image(int r, int j) const { return img_[r][j]; }

 private:
  ActionTable() {
    const auto& sc = StructureConstants::f4();
    img_.assign(kN, std::vector<std::vector<ImageTerm>>(kDim));
    for (int r = 0; r < kN; ++r) {
      for (int j = 0; j < kDim; ++j) {
        auto& out = img_[r][j];
        out.push_back({j, 0});
        if (j >= kFirstH) {
          int a = RS().cartan(RS().fundamental(j - kFirstH), r);
          if (a % 2 != 0) out.push_back({r, 1});
        } else if (j == r) {
          // fixed
        } else if (j == RS().neg(r)) {
          const auto& co = RS().coroot_expansion(r);
          for (int i = 0; i < 4; ++i)
            if (co[i] % 2 != 0) out.push_back({kFirstH + i, 1});
          out.push_back({r, 2});
        } else {
          int cur = j;
          for (int i = 1;; ++i) {
            cur = RS().sum(r, cur);
            if (cur < 0) break;
            if (sc.M(r, j, i) % 2 != 0) out.push_back({cur, i});
          }
        }
      }
    }
  }
  std::vector<std::vector<std::vector<ImageTerm>>> img_;
};

// Dense accumulator for building sparse vectors.
class Accumulator {
 public:
  void add(int k, const QuadExtElem& x) {
    if (x.is_zero()) return;
    if (!used_[k]) {
      used_[k] = true;
      val_[k] = x;
    } else {
      val_[k] += x;
    }
  }
  LieVec take() {
    LieVec out;
    for (int k = 0; k < kDim; ++k) {
      if (!used_[k]) continue;
      used_[k] = false;
      if (!val_[k].is_zero()) out.emplace_back(k, std::move(val_[k]));
    }
    return out;
  }

 private:
  std::array<bool, kDim> used_{};
  std::array<QuadExtElem, kDim> val_;
};

}  // namespace

LieVec act_u(int r, const QuadExtElem& t, const LieVec& v) {
  if (t.is_zero()) return v;
  const auto& tab = ActionTable::get();
  QuadExtElem pw[3] = {QuadExtElem(), t, t.square()};
  Accumulator acc;
  for (const auto& [j, c] : v) {
    for (const ImageTerm& it : tab.image(r, j)) {
      if (it.power == 0) acc.add(it.target, c);
      else acc.add(it.target, c * pw[it.power]);
    }
  }
  return acc.take();
}

LieVec act_h(int r, const QuadExtElem& lambda, const LieVec& v) {
  if (lambda.is_zero()) throw DivisionByZero();
  if (lambda.is_one()) return v;
  QuadExtElem inv = lambda.inverse();
  QuadExtElem pw[5] = {inv.square(), inv, QuadExtElem(), lambda, lambda.square()};
  LieVec out;
  out.reserve(v.size());
  for (const auto& [j, c] : v) {
    int a = j >= kFirstH ? 0 : RS().cartan(r, j);
    out.emplace_back(j, a == 0 ? c : c * pw[a + 2]);
  }
  return out;
}

void check_level(int r, const QuadExtElem& t) {
  if (RS().is_long(r) && !t.in_K())
    throw FieldViolation("long root " + RS().name(r) + " needs a coefficient in K, got " +
                         t.to_string());
}

GroupMatrix GroupMatrix::identity(const Field& f) {
  GroupMatrix g;
  g.field_ = &f;
  for (int j = 0; j < kDim; ++j) g.cols_[j] = {{j, f.one()}};
  return g;
}

QuadExtElem GroupMatrix::entry(int i, int j) const {
  for (const auto& [k, x] : cols_[j])
    if (k == i) return x;
  return field_->zero();
}

LieVec GroupMatrix::apply(const LieVec& v) const {
  Accumulator acc;
  for (const auto& [k, c] : v)
    for (const auto& [i, x] : cols_[k]) acc.add(i, c.is_one() ? x : c * x);
  return acc.take();
}

GroupMatrix operator*(const GroupMatrix& a, const GroupMatrix& b) {
  GroupMatrix g;
  g.field_ = a.field_ ? a.field_ : b.field_;
  for (int j = 0; j < kDim; ++j) g.cols_[j] = a.apply(b.cols_[j]);
  return g;
}

std::string GroupMatrix::dump() const {
  std::ostringstream os;
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      QuadExtElem x = entry(i, j);
      os << (j ? "\t" : "") << (x.is_zero() ? "." : x.to_string());
    }
    os << "\n";
  }
  return os.str();
}

namespace {

// Matrix of a product of one-parameter elements, applied right to left.
GroupMatrix product_u(const Field& f, const std::vector<std::pair<int, QuadExtElem>>& word) {
  GroupMatrix g = GroupMatrix::identity(f);
  for (int j = 0; j < kDim; ++j) {
    LieVec v = g.column(j);
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = act_u(it->first, it->second, v);
    g.column(j) = std::move(v);
  }
  return g;
}

}  // namespace

GroupMatrix gen_u(const Field& f, int r, const QuadExtElem& t) {
  check_level(r, t);
  return product_u(f, {{r, t}});
}

GroupMatrix gen_n(const Field& f, int r, const QuadExtElem& t) {
  check_level(r, t);
  if (t.is_zero()) throw DivisionByZero();
  return product_u(f, {{r, t}, {RS().neg(r), t.inverse()}, {r, t}});
}

GroupMatrix gen_h(const Field& f, int r, const QuadExtElem& t) {
  return gen_n(f, r, t) * gen_n(f, r, f.one());
}

GroupMatrix gen_h_diag(const Field& f, int r, const QuadExtElem& t) {
  GroupMatrix g = GroupMatrix::identity(f);
  for (int j = 0; j < kDim; ++j) g.column(j) = act_h(r, t, g.column(j));
  return g;
}

bool check_commutator(const Field& f, int r, int s, const QuadExtElem& x, const QuadExtElem& y) {
  if (s == r || s == RS().neg(r)) throw LinearlyDependent();
  GroupMatrix lhs = product_u(f, {{r, x}, {s, y}, {r, x}, {s, y}});
  std::vector<std::pair<int, QuadExtElem>> rhs;
  int rs = RS().sum(r, s);
  if (rs >= 0) {
    const bool lr = RS().is_long(r), ls = RS().is_long(s), lrs = RS().is_long(rs);
    if (lr == ls) {
      if (lr || !lrs) rhs.push_back({rs, x * y});
    } else if (!lr) {
      rhs.push_back({rs, x * y});
      rhs.push_back({RS().sum(r, rs), x.square() * y});
    } else {
      rhs.push_back({rs, x * y});
      rhs.push_back({RS().sum(s, rs), x * y.square()});
    }
  }
  return lhs == product_u(f, rhs);
}

int basis_grade(int j) { return j >= kFirstH ? 0 : RS().root(j).grade(); }

bool in_parabolic_PJ(const GroupMatrix& g) {
  for (int j = 0; j < kDim; ++j) {
    if (basis_grade(j) < 0) continue;
    for (const auto& [i, x] : g.column(j))
      if (basis_grade(i) < 0) return false;
  }
  return true;
}

namespace {

template <class Cmp>
bool unipotent_for(const GroupMatrix& g, Cmp strictly_beyond) {
  for (int j = 0; j < kDim; ++j) {
    bool diag = false;
    for (const auto& [i, x] : g.column(j)) {
      if (i == j) {
        if (!x.is_one()) return false;
        diag = true;
      } else if (!strictly_beyond(basis_grade(i), basis_grade(j))) {
        return false;
      }
    }
    if (!diag) return false;
  }
  return true;
}

}  // namespace

bool in_UJ(const GroupMatrix& g) { return unipotent_for(g, std::greater<>()); }
bool in_UJ_minus(const GroupMatrix& g) { return unipotent_for(g, std::less<>()); }

int closure_dim_mod2(const std::vector<int>& start) {
  std::array<bool, kN> in{};
  for (int x : start) in[x] = true;
  std::vector<int> h;  // row-reduced bitmasks over the fundamental coroots
  auto add_h = [&h](int m) {
    for (int b : h) m = std::min(m, m ^ b);
    if (m == 0) return false;
    h.push_back(m);
    std::sort(h.rbegin(), h.rend());
    return true;
  };
  for (bool grew = true; grew;) {
    grew = false;
    for (int x = 0; x < kN; ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < kN; ++y) {
        if (!in[y]) continue;
        if (y == RS().neg(x)) {
          int m = 0;
          for (int i = 0; i < 4; ++i)
            if (RS().coroot_expansion(x)[i] & 1) m |= 1 << i;
          grew |= add_h(m);
          continue;
        }
        int z = RS().sum(x, y);
        if (z >= 0 && !in[z] && (StructureConstants::f4().N(x, y) & 1)) in[z] = grew = true;
      }
    }
  }
  return static_cast<int>(std::count(in.begin(), in.end(), true) + h.size());
}

const std::vector<int>& lie_generators_mod2() {
  static const std::vector<int> gens = [] {
    std::vector<int> s;
    int dim = 0;
    while (dim < kDim) {
      int best = -1, best_dim = dim;
      for (int x = 0; x < kN; ++x) {
        std::vector<int> t = s;
        t.push_back(x);
        int d = closure_dim_mod2(t);
        if (d > best_dim) best = x, best_dim = d;
      }
      if (best < 0) throw std::logic_error("root vectors do not generate the Lie algebra mod 2");
      s.push_back(best);
      dim = best_dim;
    }
    return s;
  }();
  return gens;
}

}  // namespace mixf4
