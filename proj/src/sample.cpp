#include "mixf4/sample.hpp"

#include <array>

namespace mixf4 {

Sampler::Sampler(const Field& f, std::uint64_t seed, SampleShape shape) : f_(f), shape_(shape) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  rng_.seed(seq);
}

Poly Sampler::poly(bool in_k, bool nonzero) {
  const int n = f_.num_vars();
  const int tv = f_.spec().mixed_var.value_or(-1);
  for (;;) {
    std::vector<Monomial> terms;
    int count = 1 + static_cast<int>(rng_() % shape_.max_terms);
    for (int i = 0; i < count; ++i) {
      std::array<unsigned, kMaxVars> e{};
      int budget = static_cast<int>(rng_() % (shape_.max_degree + 1));
      while (budget > 0) {
        int v = static_cast<int>(rng_() % n);
        if (v == tv && in_k) {
          if (budget < 2) break;
          e[v] += 2;
          budget -= 2;
        } else {
          e[v] += 1;
          budget -= 1;
        }
      }
      terms.push_back(mono::make(e));
    }
    Poly p = Poly::from_terms(std::move(terms));
    if (!nonzero || !p.is_zero()) return p;
  }
}

RatFunc Sampler::base(bool in_k) {
  Poly num = poly(in_k, false);
  if (num.is_zero() || !shape_.denominators || !coin(4)) return RatFunc(num);
  return RatFunc(num, poly(in_k, true));
}

QuadExtElem Sampler::L() { return f_.make(base(false), coin(2) ? base(false) : RatFunc()); }

QuadExtElem Sampler::K() { return f_.make(base(true), coin(2) ? base(true) : RatFunc()); }

QuadExtElem Sampler::nonzero_L() {
  for (;;) {
    QuadExtElem x = L();
    if (!x.is_zero()) return x;
  }
}

QuadExtElem Sampler::nonzero_K() {
  for (;;) {
    QuadExtElem x = K();
    if (!x.is_zero()) return x;
  }
}

U1Elem Sampler::u1(int stratum) {
  U1Elem u = zero_u1(f_);
  switch (stratum) {
    case 0:
      u.t2 = nonzero_K(), u.t4 = nonzero_K(), u.t6 = nonzero_K();
      u.t8 = nonzero_L(), u.t10 = nonzero_L(), u.t12 = nonzero_L(), u.t15 = nonzero_L();
      break;
    case 1:
      u.t2 = K(), u.t4 = K(), u.t6 = K();
      break;
    case 2: {
      u.t2 = K(), u.t4 = K(), u.t6 = K();
      QuadExtElem* slots[] = {&u.t8, &u.t10, &u.t12, &u.t15};
      *slots[rng_() % 4] = nonzero_L();
      break;
    }
    case 3:
      u.t2 = nonzero_K(), u.t4 = K(), u.t6 = K();
      return u;
    case 4:
      u.t4 = nonzero_K(), u.t6 = K();
      return u;
    case 5:
      u.t6 = nonzero_K();
      return u;
    default:
      u.t2 = coin(2) ? K() : f_.zero(), u.t4 = coin(2) ? K() : f_.zero();
      u.t6 = coin(2) ? K() : f_.zero();
      u.t8 = coin(2) ? L() : f_.zero(), u.t10 = coin(2) ? L() : f_.zero();
      u.t12 = coin(2) ? L() : f_.zero(), u.t15 = coin(2) ? L() : f_.zero();
      break;
  }
  // t1 = x + N gamma with N the norm part, so that t1 + conj t1 = N.
  U1Elem probe = u;
  probe.t1 = f_.zero();
  RatFunc need = probe.norm_defect().u();
  RatFunc x = base(false);
  if (need.is_zero() && x.is_zero()) x = RatFunc::one();
  u.t1 = f_.make(x, need);
  return u;
}

}  // namespace mixf4
