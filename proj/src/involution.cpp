#include "mixf4/involution.hpp"

#include <sstream>

namespace mixf4 {

namespace {

const RootSystem& RS() { return RootSystem::f4(); }
constexpr int kRoots = RootSystem::kNumRoots;

}  // namespace

CoeffTable compute_coeffs(const Field& f, const QuadExtElem& alpha, const QuadExtElem& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw DivisionByZero();
  const QuadExtElem ab = alpha * beta;
  const QuadExtElem seeds[4] = {ab.inverse(), ab, alpha.inverse(), alpha / beta};
  CoeffTable t;
  t.c_.assign(kRoots, f.one());
  std::vector<bool> done(kRoots, false);
  for (int r = 0; r < kRoots; ++r) {
    if (!RS().is_positive(r)) continue;
    QuadExtElem c = f.one();
    for (int k : RS().build_chain(r)) c = c * seeds[k];
    t.c_[r] = c;
    done[r] = true;
  }
  // conj(c_r) c_{sigma(r)} = 1 reaches the negative roots of the Levi part.
  for (int r = 0; r < kRoots; ++r) {
    if (done[r] || !done[RS().sigma(r)]) continue;
    t.c_[r] = t.c_[RS().sigma(r)].conj().inverse();
    done[r] = true;
  }
  // The remaining negative roots have negative e4-part; c is a character of
  // the root lattice, so c_{-r} = 1/c_r.
  for (int r = 0; r < kRoots; ++r) {
    if (done[r]) continue;
    t.c_[r] = t.c_[RS().neg(r)].inverse();
    done[r] = true;
  }
  return t;
}

CoeffTable compute_coeffs(const Field& f) { return compute_coeffs(f, f.alpha(), f.beta()); }

bool CoeffTable::involutive() const {
  for (int r = 0; r < kRoots; ++r)
    if (!(c_[r].conj() * c_[RS().sigma(r)]).is_one()) return false;
  return true;
}

bool CoeffTable::compatible_with_commutators() const {
  for (int r = 0; r < kRoots; ++r)
    for (int s = 0; s < kRoots; ++s) {
      int rs = RS().sum(r, s);
      if (rs < 0) continue;
      const bool lr = RS().is_long(r), ls = RS().is_long(s), lrs = RS().is_long(rs);
      if (lr == ls) {
        if ((lr || !lrs) && !(c_[r] * c_[s] == c_[rs])) return false;
      } else if (!lr) {
        if (!(c_[r] * c_[s] == c_[rs])) return false;
        if (!(c_[r].square() * c_[s] == c_[RS().sum(r, rs)])) return false;
      }
    }
  return true;
}

Atom sigma_atom(const Atom& a, const CoeffTable& c) {
  const int sr = RS().sigma(a.root);
  switch (a.kind) {
    case AtomKind::kRoot:
      return Atom::u(sr, c[a.root] * a.coeff.conj());
    case AtomKind::kHua:
      return Atom::h(sr, a.coeff.conj());
    case AtomKind::kN:
      return Atom::n(sr, c[a.root] * a.coeff.conj());
  }
  return a;
}

Word sigma_word(const Word& w, const CoeffTable& c) {
  Word out;
  out.reserve(w.size());
  for (const Atom& a : w) out.push_back(sigma_atom(a, c));
  return out;
}

// ---------------------------------------------------------------------------

Mat7 Mat7::zero(const Field& f) {
  Mat7 m;
  m.f_ = &f;
  for (auto& row : m.a_) row.fill(f.zero());
  return m;
}

Mat7 Mat7::identity(const Field& f) {
  Mat7 m = zero(f);
  for (int i = 0; i < kN; ++i) m.a_[i][i] = f.one();
  return m;
}

Mat7 operator*(const Mat7& x, const Mat7& y) {
  Mat7 m = Mat7::zero(*x.f_);
  for (int i = 0; i < Mat7::kN; ++i)
    for (int k = 0; k < Mat7::kN; ++k) {
      if (x.a_[i][k].is_zero()) continue;
      for (int j = 0; j < Mat7::kN; ++j)
        if (!y.a_[k][j].is_zero()) m.a_[i][j] += x.a_[i][k] * y.a_[k][j];
    }
  return m;
}

Mat7 operator+(const Mat7& x, const Mat7& y) {
  Mat7 m = x;
  for (int i = 0; i < Mat7::kN; ++i)
    for (int j = 0; j < Mat7::kN; ++j) m.a_[i][j] += y.a_[i][j];
  return m;
}

Mat7 Mat7::conj() const {
  Mat7 m = *this;
  for (auto& row : m.a_)
    for (auto& x : row) x = x.conj();
  return m;
}

Mat7 Mat7::transpose() const {
  Mat7 m = *this;
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) m.a_[i][j] = a_[j][i];
  return m;
}

std::optional<Mat7> Mat7::inverse() const {
  Mat7 a = *this;
  Mat7 inv = identity(*f_);
  for (int col = 0; col < kN; ++col) {
    int piv = -1;
    for (int r = col; r < kN; ++r)
      if (!a.a_[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a.a_[piv], a.a_[col]);
    std::swap(inv.a_[piv], inv.a_[col]);
    QuadExtElem p = a.a_[col][col].inverse();
    for (int j = 0; j < kN; ++j) {
      a.a_[col][j] = a.a_[col][j] * p;
      inv.a_[col][j] = inv.a_[col][j] * p;
    }
    for (int r = 0; r < kN; ++r) {
      if (r == col || a.a_[r][col].is_zero()) continue;
      QuadExtElem fct = a.a_[r][col];
      for (int j = 0; j < kN; ++j) {
        a.a_[r][j] += fct * a.a_[col][j];
        inv.a_[r][j] += fct * inv.a_[col][j];
      }
    }
  }
  return inv;
}

Mat7 Mat7::normalized() const {
  for (const auto& row : a_)
    for (const auto& x : row)
      if (!x.is_zero()) {
        if (x.is_one()) return *this;
        QuadExtElem s = x.inverse();
        Mat7 m = *this;
        for (auto& rr : m.a_)
          for (auto& y : rr) y = y * s;
        return m;
      }
  return *this;
}

std::string Mat7::to_string() const {
  std::ostringstream os;
  for (const auto& row : a_) {
    for (int j = 0; j < kN; ++j) os << (j ? "\t" : "") << (row[j].is_zero() ? "0" : row[j].to_string());
    os << "\n";
  }
  return os.str();
}

Mat7 b3_generator(const Field& f, int r, const QuadExtElem& lambda) {
  const Root& root = RS().root(r);
  if (root.grade() != 0) throw std::invalid_argument("root outside the B3 subsystem");
  check_level(r, lambda);
  Mat7 m = Mat7::identity(f);
  std::vector<std::pair<int, int>> nz;  // (index 1..3, sign)
  for (int i = 0; i < 3; ++i)
    if (root.c[i] != 0) nz.push_back({i + 1, root.c[i] > 0 ? 1 : -1});
  if (nz.size() == 1) {
    int i = nz[0].first * nz[0].second;  // signed index
    m.at(0, -i) += lambda;
    m.at(i, -i) += lambda.square();
    return m;
  }
  auto [i, si] = nz[0];
  auto [j, sj] = nz[1];
  if (si > 0 && sj < 0) {  // e_i - e_j
    m.at(i, j) += lambda;
    m.at(-j, -i) += lambda;
  } else if (si < 0 && sj > 0) {  // e_j - e_i
    m.at(j, i) += lambda;
    m.at(-i, -j) += lambda;
  } else if (si > 0) {  // e_i + e_j
    m.at(i, -j) += lambda;
    m.at(j, -i) += lambda;
  } else {  // -e_i - e_j
    m.at(-i, j) += lambda;
    m.at(-j, i) += lambda;
  }
  return m;
}

bool has_mixed_shape(const Mat7& a) {
  for (int r = 1; r < Mat7::kN; ++r) {
    if (!a.raw(r, 0).is_zero()) return false;
    for (int c = 0; c < Mat7::kN; ++c)
      if (!a.raw(r, c).in_K()) return false;
  }
  return true;
}

Mat7 form_R(const Field& f) {
  Mat7 m = Mat7::zero(f);
  m.at(0, 0) = f.one();
  for (int i = 1; i <= 3; ++i) m.at(i, -i) = f.one();
  return m;
}

Mat7 form_Q(const Field& f) {
  Mat7 m = Mat7::zero(f);
  m.raw(0, 0) = f.one();
  const QuadExtElem scal[3] = {f.alpha(), f.beta(), f.alpha() * f.beta()};
  for (int b = 0; b < 3; ++b) {
    int r = 1 + 2 * b;
    m.raw(r, r) = scal[b];
    m.raw(r, r + 1) = scal[b];
    m.raw(r + 1, r + 1) = scal[b] * f.delta();
  }
  return m;
}

Mat7 matrix_S(const Field& f) {
  Mat7 m = Mat7::zero(f);
  m.raw(0, 0) = f.one();
  const QuadExtElem scal[3] = {f.alpha(), f.beta(), f.alpha() * f.beta()};
  const QuadExtElem g = f.gamma();
  for (int b = 0; b < 3; ++b) {
    int r = 1 + 2 * b;
    m.raw(r, r) = f.one();
    m.raw(r, r + 1) = g;
    m.raw(r + 1, r) = scal[b];
    m.raw(r + 1, r + 1) = scal[b] * g.conj();
  }
  return m;
}

Mat7 matrix_M(const Field& f) {
  Mat7 m = Mat7::zero(f);
  m.raw(0, 0) = f.one();
  const QuadExtElem scal[3] = {f.alpha(), f.beta(), f.alpha() * f.beta()};
  for (int b = 0; b < 3; ++b) {
    int r = 1 + 2 * b;
    m.raw(r, r + 1) = scal[b].inverse();
    m.raw(r + 1, r) = scal[b];
  }
  return m;
}

bool same_quadratic_form(const Mat7& a, const Mat7& b) {
  for (int i = 0; i < Mat7::kN; ++i) {
    if (!(a.raw(i, i) == b.raw(i, i))) return false;
    for (int j = i + 1; j < Mat7::kN; ++j)
      if (!(a.raw(i, j) + a.raw(j, i) == b.raw(i, j) + b.raw(j, i))) return false;
  }
  return true;
}

namespace {

// R evaluated on column c.
QuadExtElem r_value_of_column(const Mat7& a, int c) {
  QuadExtElem v = a.raw(Mat7::slot(0), c).square();
  for (int i = 1; i <= 3; ++i) v += a.raw(Mat7::slot(i), c) * a.raw(Mat7::slot(-i), c);
  return v;
}

}  // namespace

bool preserves_R(const Mat7& a) {
  const Field& f = a.field();
  Mat7 id = Mat7::identity(f);
  for (int c = 0; c < Mat7::kN; ++c)
    if (!(r_value_of_column(a, c) == r_value_of_column(id, c))) return false;
  Mat7 r = form_R(f);
  Mat7 polar = r + r.transpose();
  return a.transpose() * polar * a == polar;
}

Mat7 sigma_b3(const Mat7& a) {
  Mat7 m = matrix_M(a.field());
  return *m.inverse() * a.conj() * m;
}

bool fixes_flag(const Mat7& a, int sign) {
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= k; ++m) {
      int c = Mat7::slot(sign * m);
      for (int r = 0; r < Mat7::kN; ++r) {
        if (a.raw(r, c).is_zero()) continue;
        bool inside = false;
        for (int q = 1; q <= k; ++q)
          if (r == Mat7::slot(sign * q)) inside = true;
        if (!inside) return false;
      }
    }
  return true;
}

}  // namespace mixf4
