#include "modgcd.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#if defined(__PCLMUL__)
#include <immintrin.h>
#endif

namespace mixf4::detail {

namespace {

// ---------------------------------------------------------------------------
// GF(2^64) = GF(2)[z] / (z^64 + z^4 + z^3 + z + 1)

using F = std::uint64_t;

inline F reduce(F lo, F hi) {
  F o = (hi >> 63) ^ (hi >> 61) ^ (hi >> 60);
  lo ^= hi ^ (hi << 1) ^ (hi << 3) ^ (hi << 4);
  return lo ^ o ^ (o << 1) ^ (o << 3) ^ (o << 4);
}

[[maybe_unused]] F mul_portable(F a, F b) {
  F lo = 0, hi = 0;
  for (int i = 0; i < 64; ++i)
    if ((b >> i) & 1) {
      lo ^= a << i;
      if (i) hi ^= a >> (64 - i);
    }
  return reduce(lo, hi);
}

#if defined(__PCLMUL__)
inline F fmul(F a, F b) {
  __m128i p = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                   _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
  F lo = static_cast<F>(_mm_cvtsi128_si64(p));
  F hi = static_cast<F>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)));
  return reduce(lo, hi);
}
#else
inline F fmul(F a, F b) { return mul_portable(a, b); }
#endif

int deg128(unsigned __int128 x) {
  const auto hi = static_cast<std::uint64_t>(x >> 64);
  if (hi) return 127 - __builtin_clzll(hi);
  const auto lo = static_cast<std::uint64_t>(x);
  return lo ? 63 - __builtin_clzll(lo) : -1;
}

// Extended Euclid in GF(2)[z].
F finv(F a) {
  using U = unsigned __int128;
  U u = a, v = (U{1} << 64) | 0x1B, g1 = 1, g2 = 0;
  while (u != 1) {
    int j = deg128(u) - deg128(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return static_cast<F>(g1);
}

F next_point() {
  thread_local F state = 0x9E3779B97F4A7C15ull;
  F z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// Univariate polynomials over F, low degree first, no trailing zeros.

using UP = std::vector<F>;

void utrim(UP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int udeg(const UP& p) { return static_cast<int>(p.size()) - 1; }

F ueval(const UP& p, F x) {
  F r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = fmul(r, x) ^ *it;
  return r;
}

UP uscale(UP p, F s) {
  if (s == 0) return {};
  for (F& c : p) c = fmul(c, s);
  return p;
}

UP umul(const UP& a, const UP& b) {
  if (a.empty() || b.empty()) return {};
  UP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= fmul(a[i], b[j]);
  }
  return r;
}

void uadd_to(UP& a, const UP& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
  utrim(a);
}

// a = q b + r; returns q, leaves r in a.
UP udivmod(UP& a, const UP& b) {
  if (udeg(a) < udeg(b)) return {};
  UP q(a.size() - b.size() + 1, 0);
  F il = finv(b.back());
  for (int i = udeg(a); i >= udeg(b); --i) {
    F c = a[i];
    if (!c) continue;
    c = fmul(c, il);
    const int s = i - udeg(b);
    q[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] ^= fmul(c, b[j]);
  }
  utrim(a);
  return q;
}

UP umonic(UP p) {
  if (p.empty()) return p;
  return uscale(std::move(p), finv(p.back()));
}

// Inversion-free remainder steps; the result is made monic once.
UP ugcd(UP a, UP b) {
  if (udeg(a) < udeg(b)) std::swap(a, b);
  while (!b.empty()) {
    const F lb = b.back();
    while (udeg(a) >= udeg(b)) {
      const F la = a.back();
      const int s = udeg(a) - udeg(b);
      for (std::size_t i = 0; i + 1 < a.size(); ++i) a[i] = fmul(a[i], lb);
      for (std::size_t j = 0; j + 1 < b.size(); ++j) a[s + j] ^= fmul(la, b[j]);
      a.pop_back();
      utrim(a);
    }
    std::swap(a, b);
  }
  return umonic(std::move(a));
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials over F.  Exponents are packed 16 bits per
// variable, variable i at bit 16 i; integer order on the packing is a lex
// monomial order.

using Exps = std::uint64_t;

constexpr int kBits = 16;
constexpr Exps kField = 0xFFFF;

inline int exp_of(Exps e, int v) { return static_cast<int>((e >> (kBits * v)) & kField); }
inline Exps without(Exps e, int v) { return e & ~(kField << (kBits * v)); }

struct Term {
  Exps e;
  F c;
};
using MP = std::vector<Term>;  // sorted by e, nonzero coefficients

// Coefficient polynomials in one variable, keyed (and sorted) by the
// remaining exponents.
using Grouped = std::vector<std::pair<Exps, UP>>;

Grouped group(const MP& p, int y) {
  std::vector<Term> t = p;
  std::sort(t.begin(), t.end(), [y](const Term& a, const Term& b) {
    const Exps ka = without(a.e, y), kb = without(b.e, y);
    return ka != kb ? ka < kb : exp_of(a.e, y) < exp_of(b.e, y);
  });
  Grouped g;
  for (const Term& x : t) {
    const Exps k = without(x.e, y);
    const int d = exp_of(x.e, y);
    if (g.empty() || g.back().first != k) g.emplace_back(k, UP{});
    UP& u = g.back().second;
    if (static_cast<int>(u.size()) <= d) u.resize(d + 1, 0);
    u[d] ^= x.c;
  }
  for (auto& entry : g) utrim(entry.second);
  std::erase_if(g, [](const auto& entry) { return entry.second.empty(); });
  return g;
}

MP ungroup(const Grouped& g, int y) {
  MP p;
  for (const auto& [k, u] : g)
    for (std::size_t d = 0; d < u.size(); ++d)
      if (u[d]) p.push_back({k | (static_cast<Exps>(d) << (kBits * y)), u[d]});
  std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
  return p;
}

UP content(const Grouped& g) {
  UP c;
  for (const auto& entry : g) {
    c = ugcd(c, entry.second);
    if (c.size() == 1) break;
  }
  return c;
}

void divide_content(Grouped& g, const UP& c) {
  if (c.size() == 1) return;
  for (auto& entry : g) entry.second = udivmod(entry.second, c);
}

MP normalized(MP p) {
  if (p.empty()) return p;
  F s = finv(p.back().c);
  for (Term& t : p) t.c = fmul(t.c, s);
  return p;
}

// Values of the coefficient polynomials at x, keys kept sorted.
MP evaluate_at(const Grouped& g, F x) {
  MP r;
  r.reserve(g.size());
  for (const auto& [k, u] : g)
    if (F v = ueval(u, x)) r.push_back({k, v});
  return r;
}

MP gcd_rec(const MP& a, const MP& b, std::vector<int> vars);

MP gcd_univariate(const MP& a, const MP& b, int x) {
  auto dense = [x](const MP& p) {
    UP u;
    for (const Term& t : p) {
      const int d = exp_of(t.e, x);
      if (static_cast<int>(u.size()) <= d) u.resize(d + 1, 0);
      u[d] ^= t.c;
    }
    utrim(u);
    return u;
  };
  UP g = ugcd(dense(a), dense(b));
  MP r;
  for (std::size_t d = 0; d < g.size(); ++d)
    if (g[d]) r.push_back({static_cast<Exps>(d) << (kBits * x), g[d]});
  return r;
}

// Brown's algorithm: evaluate the last variable, recurse, interpolate.
MP gcd_rec(const MP& a, const MP& b, std::vector<int> vars) {
  if (vars.empty()) return MP{{0, 1}};
  const int y = vars.back();
  if (vars.size() == 1) return gcd_univariate(a, b, y);
  vars.pop_back();

  Grouped ga = group(a, y), gb = group(b, y);
  UP ca = content(ga), cb = content(gb);
  divide_content(ga, ca);
  divide_content(gb, cb);
  const UP c = ugcd(ca, cb);
  const UP& lca = ga.back().second;
  const UP& lcb = gb.back().second;
  const UP lg = ugcd(lca, lcb);

  int dya = 0, dyb = 0;
  for (const auto& entry : ga) dya = std::max(dya, udeg(entry.second));
  for (const auto& entry : gb) dyb = std::max(dyb, udeg(entry.second));
  const int bound = std::min(dya, dyb) + udeg(lg);

  Grouped h;
  Exps lm = 0;
  UP m{1};
  int stable = 0;
  for (int guard = 0; guard < 4 * bound + 64; ++guard) {
    F pt = next_point();
    F gv = ueval(lg, pt);
    if (!gv || !ueval(lca, pt) || !ueval(lcb, pt)) continue;
    MP img = gcd_rec(evaluate_at(ga, pt), evaluate_at(gb, pt), vars);
    if (img.empty()) return {};
    if (img.size() == 1 && img.front().e == 0) {
      return ungroup(Grouped{{0, c}}, y);
    }
    const Exps lmi = img.back().e;
    if (h.empty() || lmi < lm) {
      h.clear();
      for (const Term& t : img) h.emplace_back(t.e, UP{fmul(t.c, gv)});
      lm = lmi;
      m = UP{pt, 1};
      stable = 0;
    } else if (lm < lmi) {
      continue;
    } else {
      const F inv = finv(ueval(m, pt));
      // merge the image's support into h (both sorted)
      Grouped merged;
      merged.reserve(h.size() + img.size());
      std::size_t i = 0, j = 0;
      bool changed = false;
      while (i < h.size() || j < img.size()) {
        Exps k;
        UP u;
        F target = 0;
        if (j == img.size() || (i < h.size() && h[i].first < img[j].e)) {
          k = h[i].first;
          u = std::move(h[i++].second);
        } else if (i == h.size() || img[j].e < h[i].first) {
          k = img[j].e;
          target = fmul(img[j++].c, gv);
        } else {
          k = h[i].first;
          u = std::move(h[i++].second);
          target = fmul(img[j++].c, gv);
        }
        const F d = target ^ ueval(u, pt);
        if (d) {
          uadd_to(u, uscale(m, fmul(d, inv)));
          changed = true;
        }
        merged.emplace_back(k, std::move(u));
      }
      h = std::move(merged);
      m = umul(m, UP{pt, 1});
      // An image that the interpolant already predicts: stop early.  A wrong
      // guess is caught by the trial division in modular_gcd.
      stable = changed ? 0 : stable + 1;
    }
    if (udeg(m) > bound || stable >= 1) {
      std::erase_if(h, [](const auto& entry) { return entry.second.empty(); });
      divide_content(h, content(h));
      for (auto& entry : h) entry.second = umul(entry.second, c);
      return normalized(ungroup(h, y));
    }
  }
  return {};  // ran out of usable points
}

MP to_mp(const Poly& p) {
  MP r;
  r.reserve(p.terms().size());
  for (Monomial mo : p.terms()) {
    Exps e = 0;
    for (int v = 0; v < kMaxVars; ++v) e |= static_cast<Exps>(mono::exponent(mo, v)) << (kBits * v);
    r.push_back({e, 1});
  }
  std::sort(r.begin(), r.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
  return r;
}

std::optional<Poly> from_mp(const MP& p) {
  std::vector<Monomial> terms;
  for (const Term& t : p) {
    if (t.c == 0) continue;
    if (t.c != 1) return std::nullopt;
    std::array<unsigned, kMaxVars> ex{};
    for (int v = 0; v < kMaxVars; ++v) ex[v] = static_cast<unsigned>(exp_of(t.e, v));
    terms.push_back(mono::make(ex));
  }
  return Poly::from_terms(std::move(terms));
}

// Degree of the gcd in variable x, from one image with every other variable
// evaluated at a random point; an upper bound, exact for a lucky point.
int image_degree(const MP& a, const MP& b, int x) {
  std::array<std::vector<F>, kMaxVars> pw;
  for (int i = 0; i < kMaxVars; ++i) pw[i] = {1, next_point()};
  auto power = [&](int i, int k) {
    std::vector<F>& t = pw[i];
    while (static_cast<int>(t.size()) <= k) t.push_back(fmul(t.back(), t[1]));
    return t[k];
  };
  int da = 0, db = 0;
  auto image = [&](const MP& p, int& deg) {
    UP u;
    for (const Term& t : p) {
      F v = t.c;
      for (int i = 0; i < kMaxVars; ++i)
        if (i != x && exp_of(t.e, i)) v = fmul(v, power(i, exp_of(t.e, i)));
      const int d = exp_of(t.e, x);
      deg = std::max(deg, d);
      if (static_cast<int>(u.size()) <= d) u.resize(d + 1, 0);
      u[d] ^= v;
    }
    utrim(u);
    return u;
  };
  UP ua = image(a, da), ub = image(b, db);
  if (udeg(ua) != da || udeg(ub) != db) return -1;  // unlucky, no information
  return udeg(ugcd(ua, ub));
}

}  // namespace

std::optional<Poly> modular_gcd(const Poly& a, const Poly& b) {
  const unsigned sup = a.support() | b.support();
  std::vector<int> vars;
  for (int v = 0; v < kMaxVars; ++v)
    if (sup & (1u << v)) vars.push_back(v);
  const MP ma = to_mp(a), mb = to_mp(b);
  bool coprime = true;
  for (int v : vars)
    if (image_degree(ma, mb, v) != 0) {
      coprime = false;
      break;
    }
  if (coprime) return Poly::one();
  for (int attempt = 0; attempt < 4; ++attempt) {
    MP g = gcd_rec(ma, mb, vars);
    if (g.empty()) continue;
    auto p = from_mp(normalized(g));
    if (!p || p->is_zero()) continue;
    if (divide_exact(a, *p) && divide_exact(b, *p)) return p;
  }
  return std::nullopt;
}

}  // namespace mixf4::detail
