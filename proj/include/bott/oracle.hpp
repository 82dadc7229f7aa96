#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bott/cohomology_class.hpp"
#include "bott/linalg.hpp"
#include "bott/ring.hpp"

namespace bott {

/// Cap on the number of candidate images per generator, (2 bound + 1)^n, in
/// the isomorphism search.
inline constexpr std::uint64_t kDefaultMaxCandidates = 1'000'000;

/// All primitive degree-2 classes with coefficients in [-bound, bound] whose
/// square vanishes, one per sign pair (highest-index coefficient positive),
/// sorted by leading index then coefficients.
std::vector<CohomologyClass> brute_square_zero(const BottRing& ring, int bound);

struct VanishingPair {
  CohomologyClass z;
  CohomologyClass zbar;
};

/// The pair (a x_j + u, sign (a (x_j - alpha_j) - u)) with u supported below j
/// and u (u + a alpha_j) = 0.
struct VanishingPairWitness {
  int stage = 0;
  Coeff a = 0;
  CohomologyClass u;
  int sign = 1;
};

/// Re-derive the pair from the witness and check both witness identities.
bool witness_reconstructs(const BottRing& ring, const VanishingPair& pair, const VanishingPairWitness& w);

/// Decompose z at its leading stage and match zbar against the two allowed
/// signs. nullopt when the pair does not have that shape.
std::optional<VanishingPairWitness> match_vanishing_pair(const BottRing& ring, const VanishingPair& pair);

struct VanishingPairScan {
  std::vector<std::pair<VanishingPair, VanishingPairWitness>> matched;
  std::vector<VanishingPair> violations;
};

/// Every unordered primitive pair (z, zbar) in the coefficient box with
/// z zbar = 0 (signs canonical, z = zbar allowed), each matched to a witness.
/// Pairs that admit none land in violations.
VanishingPairScan brute_vanishing_pairs(const BottRing& ring, int bound);

/// Explicit ring isomorphism H*(A) -> H*(B): column j is the image of x_j.
struct IsoWitness {
  IntMatrix matrix;
};

/// Unimodular, relation-preserving, and the inverse preserves B's relations
/// in A.
bool verify_iso_witness(const BottRing& a, const BottRing& b, const IsoWitness& w);

/// Depth-first search for an isomorphism with entries in [-bound, bound].
/// Images of x_1, x_2, ... are assigned in turn, cheapest first, and the
/// relation for x_j is checked as soon as column j is placed. The first
/// witness found is verified before it is returned; nullopt means none exists
/// inside the box. Throws InputError on unequal heights and GuardExceeded
/// when (2 bound + 1)^n exceeds max_candidates.
std::optional<IsoWitness> brute_iso_search(const BottRing& a, const BottRing& b, int bound,
                                           std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Every isomorphism in the box, in search order.
std::vector<IsoWitness> brute_isomorphisms(const BottRing& a, const BottRing& b, int bound,
                                           std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Ranks of the degree 0, 2, ..., 2n components, computed as the rank of the
/// span of all normalized products of k generators.
std::vector<Coeff> betti_profile(const BottRing& ring);

}  // namespace bott
