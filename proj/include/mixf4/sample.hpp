#ifndef MIXF4_SAMPLE_HPP_
#define MIXF4_SAMPLE_HPP_

#include <cstdint>
#include <random>

#include "mixf4/field.hpp"
#include "mixf4/rewrite.hpp"

namespace mixf4 {

struct SampleShape {
  int max_terms = 3;
  int max_degree = 2;     // total degree of each monomial
  bool denominators = true;  // a quarter of base elements get one
};

// Deterministic generator of small random field elements and U^1 elements.
class Sampler {
 public:
  Sampler(const Field& f, std::uint64_t seed, SampleShape shape = {});

  RatFunc base(bool in_k);
  QuadExtElem L();
  QuadExtElem K();
  QuadExtElem nonzero_L();
  QuadExtElem nonzero_K();

  // Uniform over the strata below: which free coefficients are zero.
  //   0  generic, all free coefficients nonzero
  //   1  t8 = t10 = t12 = t15 = 0, t1 != 0
  //   2  only one of t8, t10, t12, t15 nonzero
  //   3  t1 = 0 (forces the other L-coefficients to vanish), t2 != 0
  //   4  t1 = t2 = 0, t4 != 0
  //   5  t1 = t2 = t4 = 0, t6 != 0
  //   6  random sparse support
  static constexpr int kStrata = 7;
  U1Elem u1(int stratum);
  U1Elem u1() { return u1(static_cast<int>(rng_() % kStrata)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  Poly poly(bool in_k, bool nonzero);
  bool coin(int one_in) { return rng_() % one_in == 0; }

  const Field& f_;
  SampleShape shape_;
  std::mt19937_64 rng_;
};

}  // namespace mixf4

#endif  // MIXF4_SAMPLE_HPP_
