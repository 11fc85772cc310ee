#include "mixf4/field.hpp"

#include <cctype>
#include <set>

namespace mixf4 {

namespace {

RatFunc var_rf(int i) { return RatFunc(Poly::var(i)); }

}  // namespace

FieldSpec FieldSpec::default_mixed() {
  FieldSpec s;
  s.indeterminates = {"d", "a", "b", "t"};
  s.mixed_var = 3;
  s.mode = FieldMode::kMixed;
  s.delta = var_rf(0);
  s.alpha = var_rf(1);
  s.beta = var_rf(2);
  return s;
}

FieldSpec FieldSpec::default_algebraic() {
  FieldSpec s;
  s.indeterminates = {"d", "a", "b"};
  s.mixed_var = std::nullopt;
  s.mode = FieldMode::kAlgebraic;
  s.delta = var_rf(0);
  s.alpha = var_rf(1);
  s.beta = var_rf(2);
  return s;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const auto& names = spec_.indeterminates;
  if (names.empty() || names.size() > static_cast<std::size_t>(kMaxVars))
    throw ConfigError("between 1 and 4 indeterminates are supported");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw ConfigError("bad indeterminate name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw ConfigError("bad indeterminate name '" + n + "'");
    if (n == "g") throw ConfigError("'g' is reserved for the generator of L/l");
    if (!seen.insert(n).second) throw ConfigError("duplicate indeterminate '" + n + "'");
  }
  if (spec_.mode == FieldMode::kMixed) {
    if (!spec_.mixed_var || *spec_.mixed_var < 0 || *spec_.mixed_var >= num_vars())
      throw ConfigError("mixed mode needs a valid mixed variable");
  } else {
    spec_.mixed_var = std::nullopt;
  }
  for (const RatFunc* x : {&spec_.delta, &spec_.alpha, &spec_.beta}) {
    for (const Poly* p : {&x->num(), &x->den()})
      if (p->support() >> num_vars())
        throw ConfigError("constant uses an undeclared indeterminate");
  }
  if (spec_.delta.is_zero() || spec_.alpha.is_zero() || spec_.beta.is_zero())
    throw ConfigError("delta, alpha and beta must be nonzero");
  if (!in_subfield_k(spec_.delta) || !in_subfield_k(spec_.alpha) || !in_subfield_k(spec_.beta))
    throw ConfigError("delta, alpha and beta must lie in k");
  delta_num_ = spec_.delta.num();
  delta_den_ = spec_.delta.den();
}

bool Field::in_subfield_k(const RatFunc& x) const {
  if (!mixed()) return true;
  return x.is_even_in(*spec_.mixed_var);
}

QuadExtElem Field::zero() const { return QuadExtElem(this, Poly(), Poly(), Poly::one()); }
QuadExtElem Field::one() const { return QuadExtElem(this, Poly::one(), Poly(), Poly::one()); }
QuadExtElem Field::gamma() const { return QuadExtElem(this, Poly(), Poly::one(), Poly::one()); }

QuadExtElem Field::embed(const RatFunc& x) const {
  return QuadExtElem::reduced(this, x.num(), Poly(), x.den());
}

QuadExtElem Field::make(const RatFunc& u, const RatFunc& v) const {
  if (v.is_zero()) return embed(u);
  if (u.is_zero()) return QuadExtElem::reduced(this, Poly(), v.num(), v.den());
  if (u.den() == v.den()) return QuadExtElem::reduced(this, u.num(), v.num(), u.den());
  Poly g = gcd(u.den(), v.den());
  Poly fu = v.den() / g;
  Poly fv = u.den() / g;
  // gcd(u.num*fu, v.num*fv, lcm) = 1 since each numerator is coprime to its
  // own denominator.
  return QuadExtElem::reduced(this, u.num() * fu, v.num() * fv, u.den() * fu);
}

QuadExtElem Field::variable(int i) const {
  if (i < 0 || i >= num_vars()) throw std::out_of_range("variable index");
  return embed(var_rf(i));
}

QuadExtElem Field::delta() const { return embed(spec_.delta); }
QuadExtElem Field::alpha() const { return embed(spec_.alpha); }
QuadExtElem Field::beta() const { return embed(spec_.beta); }

// ---------------------------------------------------------------------------

QuadExtElem::QuadExtElem(const Field* f, Poly p, Poly q, Poly den)
    : field_(f), p_(std::move(p)), q_(std::move(q)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (p_.is_zero() && q_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  if (den_.is_one()) return;
  Poly g = p_.is_zero() ? den_ : gcd(p_, den_);
  if (!g.is_one() && !q_.is_zero()) g = gcd(g, q_);
  if (g.is_one()) return;
  p_ = p_ / g;
  q_ = q_ / g;
  den_ = den_ / g;
}

QuadExtElem QuadExtElem::reduced(const Field* f, Poly p, Poly q, Poly den) {
  QuadExtElem r;
  r.field_ = f;
  r.p_ = std::move(p);
  r.q_ = std::move(q);
  r.den_ = std::move(den);
  return r;
}

bool QuadExtElem::in_K() const {
  if (field_ == nullptr || !field_->mixed()) return true;
  return field_->in_subfield_k(u()) && field_->in_subfield_k(v());
}

QuadExtElem QuadExtElem::conj() const {
  if (q_.is_zero()) return *this;
  // (p + q) + q*gamma over the same denominator; the gcd condition persists.
  return reduced(field_, p_ + q_, q_, den_);
}

RatFunc QuadExtElem::norm() const {
  // (p^2 + p q + delta q^2) / den^2
  const Poly& dn = field_->delta_num();
  const Poly& dd = field_->delta_den();
  Poly num = dd * (p_.square() + p_ * q_) + dn * q_.square();
  return RatFunc(num, dd * den_.square());
}

QuadExtElem QuadExtElem::square() const {
  if (q_.is_zero()) return reduced(field_, p_.square(), Poly(), den_.square());
  // (p + q gamma)^2 = p^2 + delta q^2 + q^2 gamma
  const Poly& dn = field_->delta_num();
  const Poly& dd = field_->delta_den();
  if (dd.is_one())
    return reduced(field_, p_.square() + dn * q_.square(), q_.square(), den_.square());
  return QuadExtElem(field_, dd * p_.square() + dn * q_.square(), dd * q_.square(),
                     dd * den_.square());
}

QuadExtElem QuadExtElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (q_.is_zero()) return reduced(field_, den_, Poly(), p_);
  // conj(x) / N(x) = (p + q + q gamma) den dd / (dd p^2 + dd p q + dn q^2)
  const Poly& dn = field_->delta_num();
  const Poly& dd = field_->delta_den();
  Poly n = dd * (p_.square() + p_ * q_) + dn * q_.square();
  Poly scale = den_ * dd;
  return QuadExtElem(field_, (p_ + q_) * scale, q_ * scale, n);
}

QuadExtElem QuadExtElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QuadExtElem base = *this;
  QuadExtElem acc = field_ ? field_->one() : QuadExtElem(nullptr, Poly::one(), Poly(), Poly::one());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base.square();
  }
  return acc;
}

namespace {

const Field* pick_field(const QuadExtElem& a, const QuadExtElem& b) {
  return a.field() != nullptr ? a.field() : b.field();
}

}  // namespace

QuadExtElem operator+(const QuadExtElem& a, const QuadExtElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Field* f = pick_field(a, b);
  if (a.den_ == b.den_) return QuadExtElem(f, a.p_ + b.p_, a.q_ + b.q_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  Poly fa = b.den_ / g;
  Poly fb = a.den_ / g;
  Poly p = a.p_ * fa + b.p_ * fb;
  Poly q = a.q_ * fa + b.q_ * fb;
  if (p.is_zero() && q.is_zero()) return f->zero();
  if (g.is_one()) return QuadExtElem::reduced(f, std::move(p), std::move(q), a.den_ * b.den_);
  // A common factor of (p, q) and the new denominator divides g.
  Poly h = p.is_zero() ? g : gcd(p, g);
  if (!h.is_one() && !q.is_zero()) h = gcd(h, q);
  if (h.is_one()) return QuadExtElem::reduced(f, std::move(p), std::move(q), (fa * fb) * g);
  return QuadExtElem::reduced(f, p / h, q / h, (fa * fb) * (g / h));
}

QuadExtElem operator*(const QuadExtElem& a, const QuadExtElem& b) {
  const Field* f = pick_field(a, b);
  if (a.is_zero() || b.is_zero()) return f->zero();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.q_.is_zero() && b.q_.is_zero()) {
    RatFunc r = a.u() * b.u();
    return QuadExtElem::reduced(f, r.num(), Poly(), r.den());
  }
  Poly den = a.den_ * b.den_;
  Poly pp = a.p_ * b.p_;
  Poly qq = a.q_ * b.q_;
  Poly cross;
  if (a.q_.is_zero()) {
    cross = a.p_ * b.q_;
  } else if (b.q_.is_zero()) {
    cross = a.q_ * b.p_;
  } else {
    cross = a.p_ * b.q_ + a.q_ * b.p_;
  }
  // gamma^2 = gamma + delta
  const Poly& dn = f->delta_num();
  const Poly& dd = f->delta_den();
  if (dd.is_one()) return QuadExtElem(f, pp + dn * qq, cross + qq, den);
  return QuadExtElem(f, dd * pp + dn * qq, dd * (cross + qq), dd * den);
}

std::string QuadExtElem::to_string() const {
  static const std::vector<std::string> kNoNames;
  const auto& names = field_ ? field_->names() : kNoNames;
  RatFunc uu = u();
  RatFunc vv = v();
  if (vv.is_zero()) return uu.to_string(names);
  std::string vs = "(" + vv.to_string(names) + ")*g";
  if (uu.is_zero()) return vs;
  return "(" + uu.to_string(names) + ") + " + vs;
}

// ---------------------------------------------------------------------------
// Expression parser: + - * / ^ ( ), integers (mod 2), indeterminates, g.

namespace {

class Parser {
 public:
  Parser(const Field& f, std::string_view s) : f_(f), s_(s) {}

  QuadExtElem run() {
    QuadExtElem x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse element '" + std::string(s_) + "' at " +
                     std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadExtElem expr() {
    QuadExtElem x = term();
    while (accept('+') || accept('-')) x = x + term();
    return x;
  }
  QuadExtElem term() {
    QuadExtElem x = power();
    for (;;) {
      if (accept('*')) {
        x = x * power();
      } else if (accept('/')) {
        QuadExtElem y = power();
        if (y.is_zero()) fail("division by zero");
        x = x / y;
      } else {
        return x;
      }
    }
  }
  QuadExtElem power() {
    QuadExtElem x = unary();
    if (accept('^')) {
      bool neg = accept('-');
      skip();
      long e = integer();
      if (neg && x.is_zero()) fail("zero to a negative power");
      x = x.pow(static_cast<int>(neg ? -e : e));
    }
    return x;
  }
  QuadExtElem unary() {
    if (accept('-')) return unary();  // characteristic 2
    return primary();
  }
  long integer() {
    std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return v;
  }
  QuadExtElem primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QuadExtElem x = expr();
      if (!accept(')')) fail("expected ')'");
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return integer() % 2 ? f_.one() : f_.zero();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "g") return f_.gamma();
      const auto& names = f_.names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return f_.variable(static_cast<int>(i));
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Field& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadExtElem Field::parse(std::string_view text) const { return Parser(*this, text).run(); }

RatFunc Field::parse_base(std::string_view text) const {
  QuadExtElem x = parse(text);
  if (!x.in_base()) throw ParseError("element of l expected: '" + std::string(text) + "'");
  return x.u();
}

}  // namespace mixf4
