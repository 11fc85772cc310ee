#ifndef MIXF4_SRC_MODGCD_HPP_
#define MIXF4_SRC_MODGCD_HPP_

#include <optional>

#include "mixf4/poly.hpp"

namespace mixf4::detail {

// Dense-interpolation gcd (Brown) through images over GF(2^64), verified by
// exact division.  std::nullopt when every attempt failed verification.
std::optional<Poly> modular_gcd(const Poly& a, const Poly& b);

}  // namespace mixf4::detail

#endif  // MIXF4_SRC_MODGCD_HPP_
