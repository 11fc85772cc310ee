#include "mixf4/poly.hpp"

#include "modgcd.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mixf4 {

namespace {

// Sort decreasing and cancel equal monomials in pairs.
void canonicalize(std::vector<Monomial>& t) {
  std::sort(t.begin(), t.end(), std::greater<>());
  std::size_t out = 0;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    if ((j - i) % 2 == 1) t[out++] = t[i];
    i = j;
  }
  t.resize(out);
}

}  // namespace

Poly Poly::from_terms(std::vector<Monomial> terms) {
  canonicalize(terms);
  return Poly(std::move(terms));
}

unsigned Poly::degree_in(int var) const {
  unsigned d = 0;
  for (Monomial m : terms_) d = std::max(d, mono::exponent(m, var));
  return d;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : mono::total_degree(terms_.front());
}

unsigned Poly::support() const {
  unsigned s = 0;
  for (Monomial m : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (mono::exponent(m, i) != 0) s |= 1u << i;
  return s;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return 0;
  Monomial g = terms_.front();
  for (Monomial m : terms_) {
    if (g == 0) break;
    g = mono::min(g, m);
  }
  return g;
}

bool Poly::is_even_in(int var) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [var](Monomial m) { return mono::exponent(m, var) % 2 == 0; });
}

Poly Poly::square() const {
  std::vector<Monomial> t;
  t.reserve(terms_.size());
  for (Monomial m : terms_) t.push_back(mono::mul(m, m));
  return Poly(std::move(t));
}

Poly Poly::mul_monomial(Monomial m) const {
  if (m == 0) return *this;
  std::vector<Monomial> t;
  t.reserve(terms_.size());
  for (Monomial x : terms_) t.push_back(mono::mul(x, m));
  return Poly(std::move(t));
}

Poly Poly::div_monomial(Monomial m) const {
  if (m == 0) return *this;
  std::vector<Monomial> t;
  t.reserve(terms_.size());
  for (Monomial x : terms_) {
    if (!mono::divides(m, x)) throw std::domain_error("monomial does not divide");
    t.push_back(x - m);
  }
  return Poly(std::move(t));
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Monomial> t;
  t.reserve(a.size() + b.size());
  auto i = a.terms_.begin(), ie = a.terms_.end();
  auto j = b.terms_.begin(), je = b.terms_.end();
  while (i != ie && j != je) {
    if (*i > *j) {
      t.push_back(*i++);
    } else if (*j > *i) {
      t.push_back(*j++);
    } else {
      ++i;
      ++j;
    }
  }
  t.insert(t.end(), i, ie);
  t.insert(t.end(), j, je);
  return Poly(std::move(t));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.size() == 1) return b.mul_monomial(a.lead());
  if (b.size() == 1) return a.mul_monomial(b.lead());
  std::vector<Monomial> t;
  t.reserve(a.size() * b.size());
  for (Monomial x : a.terms_)
    for (Monomial y : b.terms_) t.push_back(mono::mul(x, y));
  canonicalize(t);
  return Poly(std::move(t));
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly();
  if (b.is_one()) return a;
  if (b.size() == 1) {
    Monomial m = b.lead();
    for (Monomial x : a.terms_)
      if (!mono::divides(m, x)) return std::nullopt;
    return a.div_monomial(m);
  }
  if (b.total_degree() > a.total_degree()) return std::nullopt;
  for (int v = 0; v < kMaxVars; ++v)
    if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;

  const Monomial lb = b.lead();
  std::vector<Monomial> q;
  Poly r = a;
  while (!r.is_zero()) {
    Monomial lt = r.lead();
    if (!mono::divides(lb, lt)) return std::nullopt;
    Monomial qm = lt - lb;
    q.push_back(qm);
    r = r + b.mul_monomial(qm);
  }
  return Poly(std::move(q));
}

Poly operator/(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::domain_error("inexact polynomial division");
  return std::move(*q);
}

std::vector<Poly> Poly::coefficients_in(int var) const {
  std::vector<std::vector<Monomial>> buckets(degree_in(var) + 1);
  const Monomial u = mono::unit(var);
  for (Monomial m : terms_) {
    unsigned e = mono::exponent(m, var);
    buckets[e].push_back(m - e * u);
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly(std::move(b)));
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, int var) {
  std::vector<Monomial> t;
  const Monomial u = mono::unit(var);
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (e > kMaxExponent) throw ExponentOverflow();
    for (Monomial m : coeffs[e].terms_) t.push_back(mono::mul(m, e * u));
  }
  canonicalize(t);
  return Poly(std::move(t));
}

std::pair<Poly, Poly> Poly::split_parity(int var) const {
  std::vector<Monomial> even, odd;
  for (Monomial m : terms_)
    (mono::exponent(m, var) % 2 == 0 ? even : odd).push_back(m);
  return {Poly(std::move(even)), Poly(std::move(odd))};
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (Monomial m : terms_) {
    if (!first_term) os << " + ";
    first_term = false;
    if (m == 0) {
      os << "1";
      continue;
    }
    bool first_factor = true;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = mono::exponent(m, i);
      if (e == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd: recursive primitive remainder sequences over GF(2)[others][x].

namespace {

using Coeffs = std::vector<Poly>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly content_of(const Coeffs& c) {
  Poly g;
  for (const Poly& p : c) {
    if (p.is_zero()) continue;
    g = gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

Coeffs divide_all(const Coeffs& c, const Poly& d) {
  if (d.is_one()) return c;
  Coeffs out;
  out.reserve(c.size());
  for (const Poly& p : c) out.push_back(p / d);
  return out;
}

Coeffs primitive_part(const Coeffs& c) { return divide_all(c, content_of(c)); }

// One reduction of a modulo b (both nonzero, deg a >= deg b), leading
// coefficients scaled by their cofactors with respect to their gcd.
void reduce_step(Coeffs& a, const Coeffs& b) {
  const std::size_t s = a.size() - b.size();
  const Poly& la = a.back();
  const Poly& lb = b.back();
  Poly g = gcd(la, lb);
  Poly fa = lb / g;
  Poly fb = la / g;
  for (Poly& p : a) p = p * fa;
  for (std::size_t i = 0; i < b.size(); ++i) a[i + s] += b[i] * fb;
  trim(a);
}

Poly gcd_no_monomial_content(Poly a, Poly b);

Poly gcd_core(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_one() || b.is_one()) return Poly::one();
  if (a == b) return a;
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  Monomial mg = mono::min(ma, mb);
  Poly ca = a.div_monomial(ma), cb = b.div_monomial(mb);
  auto fast = detail::modular_gcd(ca, cb);
  Poly core = fast ? std::move(*fast) : gcd_no_monomial_content(ca, cb);
  return core.mul_monomial(mg);
}

Poly gcd_no_monomial_content(Poly a, Poly b) {
  for (;;) {
    if (a.is_one() || b.is_one()) return Poly::one();
    if (a == b) return a;
    unsigned sa = a.support(), sb = b.support();
    unsigned only_a = sa & ~sb, only_b = sb & ~sa;
    if ((sa & sb) == 0) return Poly::one();
    if (only_a == 0 && only_b == 0) break;
    // The gcd is free of variables occurring in just one argument.
    for (int v = 0; v < kMaxVars; ++v) {
      if (only_a & (1u << v)) a = content_of(a.coefficients_in(v));
      if (only_b & (1u << v)) b = content_of(b.coefficients_in(v));
    }
    Monomial ma = a.monomial_content(), mb = b.monomial_content();
    a = a.div_monomial(ma);
    b = b.div_monomial(mb);
  }

  // Main variable: the shared one of smallest combined degree.
  unsigned shared = a.support() & b.support();
  int x = -1;
  unsigned best = ~0u;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!(shared & (1u << v))) continue;
    unsigned d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      x = v;
    }
  }

  Coeffs ca = a.coefficients_in(x);
  Coeffs cb = b.coefficients_in(x);
  Poly conta = content_of(ca);
  Poly contb = content_of(cb);
  Poly c = gcd(conta, contb);
  Coeffs pa = divide_all(ca, conta);
  Coeffs pb = divide_all(cb, contb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  Poly g;
  for (;;) {
    if (pb.size() == 1) {
      g = Poly::one();
      break;
    }
    while (pa.size() >= pb.size()) {
      reduce_step(pa, pb);
      if (!pa.empty()) pa = primitive_part(pa);
    }
    if (pa.empty()) {
      g = Poly::from_coefficients(pb, x);
      break;
    }
    std::swap(pa, pb);
  }
  return c * g;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_core(a, b); }

}  // namespace mixf4
