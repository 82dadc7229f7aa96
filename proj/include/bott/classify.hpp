#pragma once

#include <optional>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/cohomology_class.hpp"
#include "bott/partition.hpp"
#include "bott/ring.hpp"

namespace bott {

/// Whether every coefficient of alpha_j is even.
enum class AlphaParity { Even, Odd };

/// The square-zero primitive class attached to a stage j with alpha_j^2 = 0:
/// x_j - alpha_j / 2 when alpha_j is even, 2 x_j - alpha_j otherwise. The
/// x_j coefficient is kept positive, which fixes the sign.
struct SquareZeroForm {
  int stage = 0;
  AlphaParity parity = AlphaParity::Even;
  CohomologyClass element;
  Mod2Class mod2;
};

/// alpha_j^2 = 0 for every stage.
bool is_q_trivial(const BottRing& ring);

/// One form per stage j with alpha_j^2 = 0, in stage order. Works on any
/// ring. Up to sign these are all the square-zero primitive classes in
/// degree 2.
std::vector<SquareZeroForm> square_zero_primitives(const BottRing& ring);

/// Groups the square-zero forms by their mod-2 reductions and returns the
/// group sizes as a partition of n. Throws DomainError if the ring is not
/// Q-trivial.
Partition partition_invariant(const BottRing& ring);

/// Block-diagonal matrix of H_lambda: a part of size d contributes a block
/// whose first row is (0, 1, ..., 1). Blocks follow the descending parts.
BottMatrix canonical_model(const Partition& p);

/// Graded-ring isomorphism of two Q-trivial rings, decided by comparing
/// partition invariants. Rings of different height are never isomorphic.
/// Throws DomainError if either ring is not Q-trivial.
bool is_isomorphic(const BottRing& a, const BottRing& b);

struct ClassificationReport {
  bool q_trivial = false;
  int square_zero_count = 0;
  std::optional<Partition> partition;
};

ClassificationReport classify(const BottRing& ring);

}  // namespace bott
