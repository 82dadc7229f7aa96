#include "bott/ring_map.hpp"

#include "bott/error.hpp"

namespace bott {

CohomologyClass apply_linear(const IntMatrix& m, const CohomologyClass& c) {
  return CohomologyClass::linear(m.apply(c.linear_coefficients(m.n())));
}

bool relations_preserved(const BottRing& source, const BottRing& target, const IntMatrix& m) {
  if (m.n() != source.n() || m.n() != target.n())
    throw InputError("ring map: " + std::to_string(m.n()) + "x" + std::to_string(m.n()) + " matrix between rings of height " +
                     std::to_string(source.n()) + " and " + std::to_string(target.n()));
  for (int j = 1; j <= source.n(); ++j) {
    const CohomologyClass image = CohomologyClass::linear(m.column(j - 1));
    const CohomologyClass lhs = target.square(image);
    const CohomologyClass rhs = target.mul(apply_linear(m, source.alpha(j)), image);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace bott
