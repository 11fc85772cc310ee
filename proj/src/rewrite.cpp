#include "mixf4/rewrite.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace mixf4 {

namespace {

const RootSystem& RS() { return RootSystem::f4(); }

int e4_index() {
  static const int e4 = RS().index(Root{{0, 0, 0, 2}});
  return e4;
}

const Field& field_of(const U1Elem& u) {
  for (const QuadExtElem* x : {&u.t1, &u.t2, &u.t4, &u.t6, &u.t8, &u.t10, &u.t12, &u.t15})
    if (x->field()) return *x->field();
  throw std::invalid_argument("U1 element without a field");
}

// Positive power of x or of its inverse.
QuadExtElem signed_pow(const QuadExtElem& x, int e) { return x.pow(e); }

}  // namespace

// ---------------------------------------------------------------------------

bool U1Elem::is_identity() const {
  return t1.is_zero() && t2.is_zero() && t4.is_zero() && t6.is_zero() && t8.is_zero() &&
         t10.is_zero() && t12.is_zero() && t15.is_zero();
}

QuadExtElem U1Elem::norm_defect() const {
  const Field& f = field_of(*this);
  auto nrm = [&](const QuadExtElem& x) { return f.embed(x.norm()); };
  QuadExtElem a = f.alpha(), b = f.beta();
  return t1 + t1.conj() + nrm(t8) + a * nrm(t10) + b * nrm(t12) + a * b * nrm(t15);
}

std::array<QuadExtElem, 16> U1Elem::coefficients() const {
  const Field& f = field_of(*this);
  QuadExtElem a = f.alpha(), b = f.beta(), ab = a * b;
  return {f.zero(),       t1,  t2, a * t2.conj(), t4,        b * t4.conj(),
          t6,             ab * t6.conj(), t8, t8.conj(), t10, a * t10.conj(),
          t12,            b * t12.conj(), ab * t15.conj(), t15};
}

void U1Elem::validate() const {
  for (const QuadExtElem* x : {&t2, &t4, &t6})
    if (!x->in_K()) throw FieldViolation("long-root coefficient outside K: " + x->to_string());
  if (!norm_defect().is_zero()) throw NormViolation("norm relation fails for " + to_string());
}

std::string U1Elem::to_string() const {
  return "{t1: " + t1.to_string() + ", t2: " + t2.to_string() + ", t4: " + t4.to_string() +
         ", t6: " + t6.to_string() + ", t8: " + t8.to_string() + ", t10: " + t10.to_string() +
         ", t12: " + t12.to_string() + ", t15: " + t15.to_string() + "}";
}

U1Elem zero_u1(const Field& f) {
  QuadExtElem z = f.zero();
  return {z, z, z, z, z, z, z, z};
}

Word canonical_word(const U1Elem& u) {
  auto c = u.coefficients();
  Word w;
  for (int k = 1; k <= 15; ++k)
    if (!c[k].is_zero()) w.push_back(Atom::u(RS().u_root(k), c[k]));
  return w;
}

Atom n_e4(const Field& f) { return Atom::n(e4_index(), f.one()); }

Word conjugated_word(const U1Elem& u) {
  const Field& f = field_of(u);
  return concat(concat({n_e4(f)}, canonical_word(u)), {n_e4(f)});
}

// ---------------------------------------------------------------------------
// Rules

Word swap_n(const Atom& n, const Atom& x) {
  if (n.kind != AtomKind::kN) throw std::invalid_argument("swap_n needs an n-element");
  const int s = n.root;
  const int wr = RS().reflect(s, x.root);
  if (x.kind == AtomKind::kHua) return {Atom::h(wr, x.coeff), n};
  if (x.kind != AtomKind::kRoot) throw std::invalid_argument("swap_n of two n-elements");
  // n_s(c) = h_s(c) n_s
  QuadExtElem t = x.coeff;
  if (!n.coeff.is_one()) t = t * signed_pow(n.coeff, RS().cartan(s, wr));
  return {Atom::u(wr, t), n};
}

Word swap_h(const Atom& x, const Atom& h) {
  if (x.kind != AtomKind::kRoot || h.kind != AtomKind::kHua)
    throw std::invalid_argument("swap_h needs a root element and a Hua element");
  int a = RS().cartan(h.root, x.root);
  QuadExtElem t = a == 0 ? x.coeff : x.coeff * signed_pow(h.coeff, -a);
  return {h, Atom::u(x.root, t)};
}

Word swap_comm(const Atom& x, const Atom& y) {
  if (x.kind != AtomKind::kRoot || y.kind != AtomKind::kRoot)
    throw std::invalid_argument("swap_comm needs root elements");
  const int r = x.root, s = y.root;
  if (s == r || s == RS().neg(r)) throw std::invalid_argument("swap_comm of dependent roots");
  Word out = {y, x};
  const int rs = RS().sum(r, s);
  if (rs < 0 || x.coeff.is_zero() || y.coeff.is_zero()) return out;
  const bool lr = RS().is_long(r), ls = RS().is_long(s), lrs = RS().is_long(rs);
  const QuadExtElem& t = x.coeff;
  const QuadExtElem& u = y.coeff;
  if (lr == ls) {
    if (lr || !lrs) out.push_back(Atom::u(rs, t * u));
  } else if (!lr) {
    out.push_back(Atom::u(rs, t * u));
    out.push_back(Atom::u(RS().sum(r, rs), t.square() * u));
  } else {
    out.push_back(Atom::u(rs, t * u));
    out.push_back(Atom::u(RS().sum(s, rs), t * u.square()));
  }
  return out;
}

Word split_opposite(const Atom& x, const Atom& y) {
  if (x.kind != AtomKind::kRoot || y.kind != AtomKind::kRoot || y.root != RS().neg(x.root))
    throw std::invalid_argument("split_opposite needs opposite root elements");
  const QuadExtElem& t = x.coeff;
  const QuadExtElem& u = y.coeff;
  if (t.is_zero()) return {y};
  if (u.is_zero()) return {x};
  QuadExtElem d = t * u + t.field()->one();
  if (d.is_zero()) return {Atom::n(x.root, t), x};  // u_r(t) u_{-r}(1/t) = n_r(t) u_r(t)
  QuadExtElem di = d.inverse();
  return {Atom::u(y.root, u * di), Atom::h(x.root, d), Atom::u(x.root, t * di)};
}

namespace {

using Coeffs = std::array<QuadExtElem, 16>;

bool good(const Atom& a) {
  return a.kind == AtomKind::kRoot && RS().root(a.root).grade() > 0;
}

// (atoms that must cross n_{e4}, inversions among the others, length)
std::tuple<int, int, std::size_t> measure(const Word& right) {
  int bad = 0, inv = 0;
  std::vector<int> pos;
  for (const Atom& a : right) {
    if (good(a)) pos.push_back(RS().u_index(a.root));
    else ++bad;
  }
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) inv += pos[i] >= pos[j];
  return {bad, inv, right.size()};
}

std::vector<std::string> strings(const Word& w) {
  std::vector<std::string> out;
  for (const Atom& a : w) out.push_back(a.to_string());
  return out;
}

void drop_zeros(Word& w) {
  w.erase(std::remove_if(w.begin(), w.end(),
                         [](const Atom& a) { return a.kind == AtomKind::kRoot && a.coeff.is_zero(); }),
          w.end());
}

int sort_key(const Atom& a) { return RS().root(a.root).grade() == 0 ? 0 : RS().u_index(a.root); }

Word word_of(const Coeffs& c) {
  Word w;
  for (int k = 1; k <= 15; ++k)
    if (!c[k].is_zero()) w.push_back(Atom::u(RS().u_root(k), c[k]));
  return w;
}

// Rewrites n_{e4} x n_{e4}, x in U_J with x_{e4}-coefficient nonzero, as
// left n_{e4} right with left in P_J and right in U_J.
class Rewriter {
 public:
  Rewriter(const Field& f, const RewriteOptions& o, RewriteResult& res)
      : f_(f), opts_(o), res_(res) {}

  Coeffs run(const Coeffs& coeffs) {
    for (int k = 1; k <= 15; ++k)
      if (!coeffs[k].is_zero()) right_.push_back(Atom::u(RS().flip_e4(RS().u_root(k)), coeffs[k]));
    first_move();

    std::size_t start = 0;
    auto last = measure(right_);
    for (;;) {
      if (++res_.steps > opts_.step_bound)
        throw RewriteError("step bound " + std::to_string(opts_.step_bound) + " exceeded; " +
                           std::to_string(right_.size()) + " atoms right of n_e4");
      bool done = false;
      start = step(start, done);
      if (done) break;
      auto m = measure(right_);
      if (m > last) ++res_.measure_increases;
      last = m;
    }

    Coeffs c;
    c.fill(f_.zero());
    int prev = 0;
    for (const Atom& a : right_) {
      int k = RS().u_index(a.root);
      if (k <= prev) throw RewriteError("right factor not in normal order");
      c[k] = a.coeff;
      prev = k;
    }
    return c;
  }

  Word& left() { return left_; }

 private:
  void replace(std::size_t pos, std::size_t len, Word with, const char* rule) {
    drop_zeros(with);
    if (opts_.trace) {
      Word before(right_.begin() + pos, right_.begin() + pos + len);
      res_.trace.push_back({rule, strings(before), strings(with)});
    }
    right_.erase(right_.begin() + pos, right_.begin() + pos + len);
    right_.insert(right_.begin() + pos, with.begin(), with.end());
  }

  void to_left(const char* rule) {
    Word moved = swap_n(n_e4(f_), right_.front());
    if (opts_.trace) res_.trace.push_back({rule, {right_.front().to_string()}, {moved[0].to_string()}});
    left_.push_back(moved[0]);
    right_.erase(right_.begin());
  }

  // x_{-e4}(t) = x_{e4}(1/t) h_{e4}(1/t) n_{e4} x_{e4}(1/t)
  void first_move() {
    const Atom lead = right_.front();
    if (lead.root != RS().neg(e4_index())) throw RewriteError("leading atom is not x_{-e4}");
    QuadExtElem ti = lead.coeff.inverse();
    int e4 = e4_index();
    left_.push_back(Atom::u(e4, ti));
    left_.push_back(Atom::h(e4, ti));
    right_.front() = Atom::u(e4, ti);
    if (opts_.trace)
      res_.trace.push_back({"first_move",
                            {lead.to_string()},
                            {left_[0].to_string(), left_[1].to_string(), "n[e4](1)", right_[0].to_string()}});
  }

  // One rule application; returns where the next scan may start.
  std::size_t step(std::size_t start, bool& done) {
    if (right_.empty()) {
      done = true;
      return 0;
    }
    if (start == 0) {
      const Atom& a = right_.front();
      if (a.kind == AtomKind::kN) throw RewriteError("stuck: n-element right of n_e4");
      if (a.kind == AtomKind::kHua) {
        to_left("move_h");
        return 0;
      }
      if (RS().root(a.root).grade() <= 0) {
        to_left("move_u");
        return 0;
      }
    }
    for (std::size_t p = start; p + 1 < right_.size(); ++p) {
      const Atom x = right_[p];
      const Atom y = right_[p + 1];
      if (y.kind == AtomKind::kN) throw RewriteError("stuck: n-element right of n_e4");
      const std::size_t back = p == 0 ? 0 : p - 1;
      if (y.kind == AtomKind::kHua) {
        replace(p, 2, swap_h(x, y), "swap_h");
        return back;
      }
      if (y.root == x.root) {
        replace(p, 2, {Atom::u(x.root, x.coeff + y.coeff)}, "merge");
        return back;
      }
      if (good(y) && RS().u_index(y.root) > RS().u_index(x.root)) continue;
      if (y.root == RS().neg(x.root))
        replace(p, 2, split_opposite(x, y), "split_opposite");
      else
        replace(p, 2, swap_comm(x, y), "swap_comm");
      return back;
    }
    done = true;
    return 0;
  }

  const Field& f_;
  const RewriteOptions& opts_;
  RewriteResult& res_;
  Word left_;
  Word right_;
};

}  // namespace

std::array<QuadExtElem, 16> collect(const Field& f, Word w) {
  for (const Atom& a : w)
    if (a.kind != AtomKind::kRoot || RS().root(a.root).grade() < 0)
      throw std::invalid_argument("collect needs root elements of nonnegative e4-part");
  drop_zeros(w);
  for (std::size_t p = 0; p + 1 < w.size();) {
    const Atom x = w[p], y = w[p + 1];
    if (sort_key(x) < sort_key(y)) {
      ++p;
      continue;
    }
    Word with = x.root == y.root ? Word{Atom::u(x.root, x.coeff + y.coeff)} : swap_comm(x, y);
    drop_zeros(with);
    w.erase(w.begin() + p, w.begin() + p + 2);
    w.insert(w.begin() + p, with.begin(), with.end());
    p = p == 0 ? 0 : p - 1;
  }
  Coeffs c;
  c.fill(f.zero());
  for (const Atom& a : w) {
    if (sort_key(a) == 0) throw RewriteError("collect: Levi element left over");
    c[RS().u_index(a.root)] = a.coeff;
  }
  return c;
}

RewriteResult tau_normal_form(const U1Elem& u, const RewriteOptions& opts) {
  u.validate();
  if (u.is_identity()) throw IdentityInput();
  const Field& f = field_of(u);
  RewriteResult res;
  Coeffs in = u.coefficients();

  // For t1 = 0 only long roots e4 + e_i, e4 - e_i occur.  Conjugating by
  // v = x_s(1), s = e4 - r for the first of them, creates an x_{e4} term; v
  // commutes with n_{e4}, so n u n = v (n u~ n) v.
  std::optional<Atom> v;
  if (u.t1.is_zero()) {
    int k = 2;
    while (in[k].is_zero()) ++k;
    const int s = RS().index(RS().root(e4_index()) - RS().root(RS().u_root(k)));
    v = Atom::u(s, f.one());
    in = collect(f, concat(concat({*v}, word_of(in)), {*v}));
  }

  Rewriter rw(f, opts, res);
  Coeffs out = rw.run(in);
  res.b = std::move(rw.left());
  if (v) {
    out = collect(f, concat(concat({*v}, word_of(out)), {*v}));
    res.b = concat(concat({*v}, res.b), {*v});
  }
  U1Elem up{out[1], out[2], out[4], out[6], out[8], out[10], out[12], out[15]};
  if (up.coefficients() != out) throw RewriteError("right factor is not sigma-fixed");
  res.uprime = up;
  return res;
}

bool decomposition_holds(const Field& f, const Word& g, const Word& b, const U1Elem& uprime) {
  return evaluate(f, g) == evaluate(f, concat(concat(b, {n_e4(f)}), canonical_word(uprime)));
}

bool decomposes_through(const Field& f, const Word& g, const U1Elem& candidate) {
  Word w = concat(concat(g, inverse(canonical_word(candidate))), {n_e4(f)});
  return in_parabolic_PJ(evaluate(f, w));
}

bool unique_decomposition_check(const Field& f, const Word& g, const RewriteResult& r) {
  Word left = concat(concat(g, inverse(canonical_word(r.uprime))), {n_e4(f)});
  GroupMatrix lm = evaluate(f, left);
  return in_parabolic_PJ(lm) && lm == evaluate(f, r.b);
}

bool sigma_fixed(const Field& f, const Word& w, const CoeffTable& c) {
  return evaluate(f, sigma_word(w, c)) == evaluate(f, w);
}

}  // namespace mixf4
