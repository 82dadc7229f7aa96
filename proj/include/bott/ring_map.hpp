#pragma once

#include "bott/cohomology_class.hpp"
#include "bott/linalg.hpp"
#include "bott/ring.hpp"

namespace bott {

/// Image of a degree-2 class under the linear map whose column j is phi(x_j).
CohomologyClass apply_linear(const IntMatrix& m, const CohomologyClass& c);

/// Whether x_j -> column j of m extends to a graded ring homomorphism
/// H*(source) -> H*(target): phi(x_j)^2 = phi(alpha_j) phi(x_j) in target for
/// every j. Throws InputError on a dimension mismatch.
bool relations_preserved(const BottRing& source, const BottRing& target, const IntMatrix& m);

}  // namespace bott
