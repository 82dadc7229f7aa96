#pragma once

#include <cstdint>
#include <vector>

#include "bott/cohomology_class.hpp"
#include "bott/linalg.hpp"
#include "bott/partition.hpp"
#include "bott/ring.hpp"

namespace bott {

/// Default cap on the number of elements any enumeration may produce.
inline constexpr std::uint64_t kDefaultMaxEnumeration = 10'000'000;

/// Largest n for which enumerate_automorphisms will run.
inline constexpr int kMaxAutEnumerationHeight = 8;

/// The i-th square-zero generator of H*(H_n): g_1 = x_1, g_i = 2 x_i - x_1.
CohomologyClass square_zero_generator(int i);

/// A graded automorphism of H*(H_n), phi(g_i) = signs[i-1] g_{perm[i-1]}.
/// perm holds 1-based images. matrix is the induced action on degree 2:
/// column j holds the coefficients of phi(x_j).
struct AutElement {
  int n = 0;
  std::vector<int> perm;
  std::vector<int> signs;
  IntMatrix matrix;

  friend bool operator==(const AutElement&, const AutElement&) = default;
};

AutElement identity_automorphism(int n);

/// Solves for the linear map g_i -> signs[i] g_{perm(i)} exactly over the
/// rationals and checks that it is integral. Throws InputError on a malformed
/// permutation or sign vector and InvariantViolation if the solution has a
/// denominator.
AutElement signed_perm_to_matrix(int n, std::vector<int> perm, std::vector<int> signs);

/// det(m) = +-1 and the induced substitution preserves every defining
/// relation of the ring. Throws InputError on a dimension mismatch.
bool is_ring_automorphism(const BottRing& ring, const IntMatrix& m);

/// All 2^n n! automorphisms of H*(H_n), ordered by permutation (lexicographic)
/// then sign pattern. Throws GuardExceeded for n > 8 or when 2^n n! exceeds
/// max_enumeration.
std::vector<AutElement> enumerate_automorphisms(int n, std::uint64_t max_enumeration = kDefaultMaxEnumeration);

/// compose(a, b) applies b first, then a. The permutation composes as
/// perm_a o perm_b and sign i becomes signs_b[i] * signs_a[perm_b(i)].
AutElement compose(const AutElement& a, const AutElement& b);
AutElement inverse(const AutElement& a);

/// |Aut H*(H_lambda)| = prod_i (2^{d_i} d_i!)^{a_i} a_i! for
/// lambda = (d_1^{a_1}, ..., d_k^{a_k}). Throws OverflowError past 2^63.
Coeff aut_order(const Partition& p);

/// Automorphism of H*(H_lambda) in block form: one factor automorphism per
/// block of the canonical model, followed by a permutation of equal-size
/// blocks. Block b is sent to block block_perm[b-1].
struct BlockAutElement {
  Partition partition;
  std::vector<AutElement> factors;
  std::vector<int> block_perm;

  /// The action on degree-2 classes of the canonical model's ring.
  IntMatrix flatten() const;
};

/// Every element of Aut H*(H_lambda) in block form. Guarded like
/// enumerate_automorphisms (sum of parts at most 8, count under the cap).
std::vector<BlockAutElement> enumerate_block_automorphisms(const Partition& p,
                                                           std::uint64_t max_enumeration = kDefaultMaxEnumeration);

}  // namespace bott
