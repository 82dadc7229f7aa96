#pragma once

#include <cstdint>
#include <numeric>

#include "bott/error.hpp"

namespace bott {

/// Ring coefficients. All arithmetic on them goes through the checked helpers
/// below; wraparound is never silent.
using Coeff = std::int64_t;

namespace checked {

inline Coeff add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Coeff sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Coeff mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Coeff neg(Coeff a) { return sub(0, a); }

inline Coeff abs(Coeff a) { return a < 0 ? neg(a) : a; }

inline Coeff pow(Coeff base, unsigned exp) {
  Coeff r = 1;
  while (exp-- > 0) r = mul(r, base);
  return r;
}

// std::gcd on INT64_MIN is undefined; route through abs first.
inline Coeff gcd(Coeff a, Coeff b) { return std::gcd(abs(a), abs(b)); }

}  // namespace checked
}  // namespace bott
